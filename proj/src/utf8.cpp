// Copyright 2026 The contra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contra/utf8.hpp"

#include <algorithm>

#include "contra/error.hpp"

namespace contra::utf8 {

namespace {

struct CaseEntry {
  uint16_t cp;
  uint16_t upper;
  uint16_t lower;
  uint8_t is_upper;
  uint8_t is_lower;
};

// U+00C0..U+024F letters, generated from the Unicode character database.
constexpr CaseEntry kLatinCase[] = {
    {0x00C0, 0x00C0, 0x00E0, 1, 0}, {0x00C1, 0x00C1, 0x00E1, 1, 0}, {0x00C2, 0x00C2, 0x00E2, 1, 0}, {0x00C3, 0x00C3, 0x00E3, 1, 0},
    {0x00C4, 0x00C4, 0x00E4, 1, 0}, {0x00C5, 0x00C5, 0x00E5, 1, 0}, {0x00C6, 0x00C6, 0x00E6, 1, 0}, {0x00C7, 0x00C7, 0x00E7, 1, 0},
    {0x00C8, 0x00C8, 0x00E8, 1, 0}, {0x00C9, 0x00C9, 0x00E9, 1, 0}, {0x00CA, 0x00CA, 0x00EA, 1, 0}, {0x00CB, 0x00CB, 0x00EB, 1, 0},
    {0x00CC, 0x00CC, 0x00EC, 1, 0}, {0x00CD, 0x00CD, 0x00ED, 1, 0}, {0x00CE, 0x00CE, 0x00EE, 1, 0}, {0x00CF, 0x00CF, 0x00EF, 1, 0},
    {0x00D0, 0x00D0, 0x00F0, 1, 0}, {0x00D1, 0x00D1, 0x00F1, 1, 0}, {0x00D2, 0x00D2, 0x00F2, 1, 0}, {0x00D3, 0x00D3, 0x00F3, 1, 0},
    {0x00D4, 0x00D4, 0x00F4, 1, 0}, {0x00D5, 0x00D5, 0x00F5, 1, 0}, {0x00D6, 0x00D6, 0x00F6, 1, 0}, {0x00D8, 0x00D8, 0x00F8, 1, 0},
    {0x00D9, 0x00D9, 0x00F9, 1, 0}, {0x00DA, 0x00DA, 0x00FA, 1, 0}, {0x00DB, 0x00DB, 0x00FB, 1, 0}, {0x00DC, 0x00DC, 0x00FC, 1, 0},
    {0x00DD, 0x00DD, 0x00FD, 1, 0}, {0x00DE, 0x00DE, 0x00FE, 1, 0}, {0x00DF, 0x00DF, 0x00DF, 0, 1}, {0x00E0, 0x00C0, 0x00E0, 0, 1},
    {0x00E1, 0x00C1, 0x00E1, 0, 1}, {0x00E2, 0x00C2, 0x00E2, 0, 1}, {0x00E3, 0x00C3, 0x00E3, 0, 1}, {0x00E4, 0x00C4, 0x00E4, 0, 1},
    {0x00E5, 0x00C5, 0x00E5, 0, 1}, {0x00E6, 0x00C6, 0x00E6, 0, 1}, {0x00E7, 0x00C7, 0x00E7, 0, 1}, {0x00E8, 0x00C8, 0x00E8, 0, 1},
    {0x00E9, 0x00C9, 0x00E9, 0, 1}, {0x00EA, 0x00CA, 0x00EA, 0, 1}, {0x00EB, 0x00CB, 0x00EB, 0, 1}, {0x00EC, 0x00CC, 0x00EC, 0, 1},
    {0x00ED, 0x00CD, 0x00ED, 0, 1}, {0x00EE, 0x00CE, 0x00EE, 0, 1}, {0x00EF, 0x00CF, 0x00EF, 0, 1}, {0x00F0, 0x00D0, 0x00F0, 0, 1},
    {0x00F1, 0x00D1, 0x00F1, 0, 1}, {0x00F2, 0x00D2, 0x00F2, 0, 1}, {0x00F3, 0x00D3, 0x00F3, 0, 1}, {0x00F4, 0x00D4, 0x00F4, 0, 1},
    {0x00F5, 0x00D5, 0x00F5, 0, 1}, {0x00F6, 0x00D6, 0x00F6, 0, 1}, {0x00F8, 0x00D8, 0x00F8, 0, 1}, {0x00F9, 0x00D9, 0x00F9, 0, 1},
    {0x00FA, 0x00DA, 0x00FA, 0, 1}, {0x00FB, 0x00DB, 0x00FB, 0, 1}, {0x00FC, 0x00DC, 0x00FC, 0, 1}, {0x00FD, 0x00DD, 0x00FD, 0, 1},
    {0x00FE, 0x00DE, 0x00FE, 0, 1}, {0x00FF, 0x0178, 0x00FF, 0, 1}, {0x0100, 0x0100, 0x0101, 1, 0}, {0x0101, 0x0100, 0x0101, 0, 1},
    {0x0102, 0x0102, 0x0103, 1, 0}, {0x0103, 0x0102, 0x0103, 0, 1}, {0x0104, 0x0104, 0x0105, 1, 0}, {0x0105, 0x0104, 0x0105, 0, 1},
    {0x0106, 0x0106, 0x0107, 1, 0}, {0x0107, 0x0106, 0x0107, 0, 1}, {0x0108, 0x0108, 0x0109, 1, 0}, {0x0109, 0x0108, 0x0109, 0, 1},
    {0x010A, 0x010A, 0x010B, 1, 0}, {0x010B, 0x010A, 0x010B, 0, 1}, {0x010C, 0x010C, 0x010D, 1, 0}, {0x010D, 0x010C, 0x010D, 0, 1},
    {0x010E, 0x010E, 0x010F, 1, 0}, {0x010F, 0x010E, 0x010F, 0, 1}, {0x0110, 0x0110, 0x0111, 1, 0}, {0x0111, 0x0110, 0x0111, 0, 1},
    {0x0112, 0x0112, 0x0113, 1, 0}, {0x0113, 0x0112, 0x0113, 0, 1}, {0x0114, 0x0114, 0x0115, 1, 0}, {0x0115, 0x0114, 0x0115, 0, 1},
    {0x0116, 0x0116, 0x0117, 1, 0}, {0x0117, 0x0116, 0x0117, 0, 1}, {0x0118, 0x0118, 0x0119, 1, 0}, {0x0119, 0x0118, 0x0119, 0, 1},
    {0x011A, 0x011A, 0x011B, 1, 0}, {0x011B, 0x011A, 0x011B, 0, 1}, {0x011C, 0x011C, 0x011D, 1, 0}, {0x011D, 0x011C, 0x011D, 0, 1},
    {0x011E, 0x011E, 0x011F, 1, 0}, {0x011F, 0x011E, 0x011F, 0, 1}, {0x0120, 0x0120, 0x0121, 1, 0}, {0x0121, 0x0120, 0x0121, 0, 1},
    {0x0122, 0x0122, 0x0123, 1, 0}, {0x0123, 0x0122, 0x0123, 0, 1}, {0x0124, 0x0124, 0x0125, 1, 0}, {0x0125, 0x0124, 0x0125, 0, 1},
    {0x0126, 0x0126, 0x0127, 1, 0}, {0x0127, 0x0126, 0x0127, 0, 1}, {0x0128, 0x0128, 0x0129, 1, 0}, {0x0129, 0x0128, 0x0129, 0, 1},
    {0x012A, 0x012A, 0x012B, 1, 0}, {0x012B, 0x012A, 0x012B, 0, 1}, {0x012C, 0x012C, 0x012D, 1, 0}, {0x012D, 0x012C, 0x012D, 0, 1},
    {0x012E, 0x012E, 0x012F, 1, 0}, {0x012F, 0x012E, 0x012F, 0, 1}, {0x0130, 0x0130, 0x0130, 1, 0}, {0x0131, 0x0049, 0x0131, 0, 1},
    {0x0132, 0x0132, 0x0133, 1, 0}, {0x0133, 0x0132, 0x0133, 0, 1}, {0x0134, 0x0134, 0x0135, 1, 0}, {0x0135, 0x0134, 0x0135, 0, 1},
    {0x0136, 0x0136, 0x0137, 1, 0}, {0x0137, 0x0136, 0x0137, 0, 1}, {0x0138, 0x0138, 0x0138, 0, 1}, {0x0139, 0x0139, 0x013A, 1, 0},
    {0x013A, 0x0139, 0x013A, 0, 1}, {0x013B, 0x013B, 0x013C, 1, 0}, {0x013C, 0x013B, 0x013C, 0, 1}, {0x013D, 0x013D, 0x013E, 1, 0},
    {0x013E, 0x013D, 0x013E, 0, 1}, {0x013F, 0x013F, 0x0140, 1, 0}, {0x0140, 0x013F, 0x0140, 0, 1}, {0x0141, 0x0141, 0x0142, 1, 0},
    {0x0142, 0x0141, 0x0142, 0, 1}, {0x0143, 0x0143, 0x0144, 1, 0}, {0x0144, 0x0143, 0x0144, 0, 1}, {0x0145, 0x0145, 0x0146, 1, 0},
    {0x0146, 0x0145, 0x0146, 0, 1}, {0x0147, 0x0147, 0x0148, 1, 0}, {0x0148, 0x0147, 0x0148, 0, 1}, {0x0149, 0x0149, 0x0149, 0, 1},
    {0x014A, 0x014A, 0x014B, 1, 0}, {0x014B, 0x014A, 0x014B, 0, 1}, {0x014C, 0x014C, 0x014D, 1, 0}, {0x014D, 0x014C, 0x014D, 0, 1},
    {0x014E, 0x014E, 0x014F, 1, 0}, {0x014F, 0x014E, 0x014F, 0, 1}, {0x0150, 0x0150, 0x0151, 1, 0}, {0x0151, 0x0150, 0x0151, 0, 1},
    {0x0152, 0x0152, 0x0153, 1, 0}, {0x0153, 0x0152, 0x0153, 0, 1}, {0x0154, 0x0154, 0x0155, 1, 0}, {0x0155, 0x0154, 0x0155, 0, 1},
    {0x0156, 0x0156, 0x0157, 1, 0}, {0x0157, 0x0156, 0x0157, 0, 1}, {0x0158, 0x0158, 0x0159, 1, 0}, {0x0159, 0x0158, 0x0159, 0, 1},
    {0x015A, 0x015A, 0x015B, 1, 0}, {0x015B, 0x015A, 0x015B, 0, 1}, {0x015C, 0x015C, 0x015D, 1, 0}, {0x015D, 0x015C, 0x015D, 0, 1},
    {0x015E, 0x015E, 0x015F, 1, 0}, {0x015F, 0x015E, 0x015F, 0, 1}, {0x0160, 0x0160, 0x0161, 1, 0}, {0x0161, 0x0160, 0x0161, 0, 1},
    {0x0162, 0x0162, 0x0163, 1, 0}, {0x0163, 0x0162, 0x0163, 0, 1}, {0x0164, 0x0164, 0x0165, 1, 0}, {0x0165, 0x0164, 0x0165, 0, 1},
    {0x0166, 0x0166, 0x0167, 1, 0}, {0x0167, 0x0166, 0x0167, 0, 1}, {0x0168, 0x0168, 0x0169, 1, 0}, {0x0169, 0x0168, 0x0169, 0, 1},
    {0x016A, 0x016A, 0x016B, 1, 0}, {0x016B, 0x016A, 0x016B, 0, 1}, {0x016C, 0x016C, 0x016D, 1, 0}, {0x016D, 0x016C, 0x016D, 0, 1},
    {0x016E, 0x016E, 0x016F, 1, 0}, {0x016F, 0x016E, 0x016F, 0, 1}, {0x0170, 0x0170, 0x0171, 1, 0}, {0x0171, 0x0170, 0x0171, 0, 1},
    {0x0172, 0x0172, 0x0173, 1, 0}, {0x0173, 0x0172, 0x0173, 0, 1}, {0x0174, 0x0174, 0x0175, 1, 0}, {0x0175, 0x0174, 0x0175, 0, 1},
    {0x0176, 0x0176, 0x0177, 1, 0}, {0x0177, 0x0176, 0x0177, 0, 1}, {0x0178, 0x0178, 0x00FF, 1, 0}, {0x0179, 0x0179, 0x017A, 1, 0},
    {0x017A, 0x0179, 0x017A, 0, 1}, {0x017B, 0x017B, 0x017C, 1, 0}, {0x017C, 0x017B, 0x017C, 0, 1}, {0x017D, 0x017D, 0x017E, 1, 0},
    {0x017E, 0x017D, 0x017E, 0, 1}, {0x017F, 0x0053, 0x017F, 0, 1}, {0x0180, 0x0243, 0x0180, 0, 1}, {0x0181, 0x0181, 0x0253, 1, 0},
    {0x0182, 0x0182, 0x0183, 1, 0}, {0x0183, 0x0182, 0x0183, 0, 1}, {0x0184, 0x0184, 0x0185, 1, 0}, {0x0185, 0x0184, 0x0185, 0, 1},
    {0x0186, 0x0186, 0x0254, 1, 0}, {0x0187, 0x0187, 0x0188, 1, 0}, {0x0188, 0x0187, 0x0188, 0, 1}, {0x0189, 0x0189, 0x0256, 1, 0},
    {0x018A, 0x018A, 0x0257, 1, 0}, {0x018B, 0x018B, 0x018C, 1, 0}, {0x018C, 0x018B, 0x018C, 0, 1}, {0x018D, 0x018D, 0x018D, 0, 1},
    {0x018E, 0x018E, 0x01DD, 1, 0}, {0x018F, 0x018F, 0x0259, 1, 0}, {0x0190, 0x0190, 0x025B, 1, 0}, {0x0191, 0x0191, 0x0192, 1, 0},
    {0x0192, 0x0191, 0x0192, 0, 1}, {0x0193, 0x0193, 0x0260, 1, 0}, {0x0194, 0x0194, 0x0263, 1, 0}, {0x0195, 0x01F6, 0x0195, 0, 1},
    {0x0196, 0x0196, 0x0269, 1, 0}, {0x0197, 0x0197, 0x0268, 1, 0}, {0x0198, 0x0198, 0x0199, 1, 0}, {0x0199, 0x0198, 0x0199, 0, 1},
    {0x019A, 0x023D, 0x019A, 0, 1}, {0x019B, 0x019B, 0x019B, 0, 1}, {0x019C, 0x019C, 0x026F, 1, 0}, {0x019D, 0x019D, 0x0272, 1, 0},
    {0x019E, 0x0220, 0x019E, 0, 1}, {0x019F, 0x019F, 0x0275, 1, 0}, {0x01A0, 0x01A0, 0x01A1, 1, 0}, {0x01A1, 0x01A0, 0x01A1, 0, 1},
    {0x01A2, 0x01A2, 0x01A3, 1, 0}, {0x01A3, 0x01A2, 0x01A3, 0, 1}, {0x01A4, 0x01A4, 0x01A5, 1, 0}, {0x01A5, 0x01A4, 0x01A5, 0, 1},
    {0x01A6, 0x01A6, 0x0280, 1, 0}, {0x01A7, 0x01A7, 0x01A8, 1, 0}, {0x01A8, 0x01A7, 0x01A8, 0, 1}, {0x01A9, 0x01A9, 0x0283, 1, 0},
    {0x01AA, 0x01AA, 0x01AA, 0, 1}, {0x01AB, 0x01AB, 0x01AB, 0, 1}, {0x01AC, 0x01AC, 0x01AD, 1, 0}, {0x01AD, 0x01AC, 0x01AD, 0, 1},
    {0x01AE, 0x01AE, 0x0288, 1, 0}, {0x01AF, 0x01AF, 0x01B0, 1, 0}, {0x01B0, 0x01AF, 0x01B0, 0, 1}, {0x01B1, 0x01B1, 0x028A, 1, 0},
    {0x01B2, 0x01B2, 0x028B, 1, 0}, {0x01B3, 0x01B3, 0x01B4, 1, 0}, {0x01B4, 0x01B3, 0x01B4, 0, 1}, {0x01B5, 0x01B5, 0x01B6, 1, 0},
    {0x01B6, 0x01B5, 0x01B6, 0, 1}, {0x01B7, 0x01B7, 0x0292, 1, 0}, {0x01B8, 0x01B8, 0x01B9, 1, 0}, {0x01B9, 0x01B8, 0x01B9, 0, 1},
    {0x01BA, 0x01BA, 0x01BA, 0, 1}, {0x01BB, 0x01BB, 0x01BB, 0, 0}, {0x01BC, 0x01BC, 0x01BD, 1, 0}, {0x01BD, 0x01BC, 0x01BD, 0, 1},
    {0x01BE, 0x01BE, 0x01BE, 0, 1}, {0x01BF, 0x01F7, 0x01BF, 0, 1}, {0x01C0, 0x01C0, 0x01C0, 0, 0}, {0x01C1, 0x01C1, 0x01C1, 0, 0},
    {0x01C2, 0x01C2, 0x01C2, 0, 0}, {0x01C3, 0x01C3, 0x01C3, 0, 0}, {0x01C4, 0x01C4, 0x01C6, 1, 0}, {0x01C5, 0x01C4, 0x01C6, 0, 0},
    {0x01C6, 0x01C4, 0x01C6, 0, 1}, {0x01C7, 0x01C7, 0x01C9, 1, 0}, {0x01C8, 0x01C7, 0x01C9, 0, 0}, {0x01C9, 0x01C7, 0x01C9, 0, 1},
    {0x01CA, 0x01CA, 0x01CC, 1, 0}, {0x01CB, 0x01CA, 0x01CC, 0, 0}, {0x01CC, 0x01CA, 0x01CC, 0, 1}, {0x01CD, 0x01CD, 0x01CE, 1, 0},
    {0x01CE, 0x01CD, 0x01CE, 0, 1}, {0x01CF, 0x01CF, 0x01D0, 1, 0}, {0x01D0, 0x01CF, 0x01D0, 0, 1}, {0x01D1, 0x01D1, 0x01D2, 1, 0},
    {0x01D2, 0x01D1, 0x01D2, 0, 1}, {0x01D3, 0x01D3, 0x01D4, 1, 0}, {0x01D4, 0x01D3, 0x01D4, 0, 1}, {0x01D5, 0x01D5, 0x01D6, 1, 0},
    {0x01D6, 0x01D5, 0x01D6, 0, 1}, {0x01D7, 0x01D7, 0x01D8, 1, 0}, {0x01D8, 0x01D7, 0x01D8, 0, 1}, {0x01D9, 0x01D9, 0x01DA, 1, 0},
    {0x01DA, 0x01D9, 0x01DA, 0, 1}, {0x01DB, 0x01DB, 0x01DC, 1, 0}, {0x01DC, 0x01DB, 0x01DC, 0, 1}, {0x01DD, 0x018E, 0x01DD, 0, 1},
    {0x01DE, 0x01DE, 0x01DF, 1, 0}, {0x01DF, 0x01DE, 0x01DF, 0, 1}, {0x01E0, 0x01E0, 0x01E1, 1, 0}, {0x01E1, 0x01E0, 0x01E1, 0, 1},
    {0x01E2, 0x01E2, 0x01E3, 1, 0}, {0x01E3, 0x01E2, 0x01E3, 0, 1}, {0x01E4, 0x01E4, 0x01E5, 1, 0}, {0x01E5, 0x01E4, 0x01E5, 0, 1},
    {0x01E6, 0x01E6, 0x01E7, 1, 0}, {0x01E7, 0x01E6, 0x01E7, 0, 1}, {0x01E8, 0x01E8, 0x01E9, 1, 0}, {0x01E9, 0x01E8, 0x01E9, 0, 1},
    {0x01EA, 0x01EA, 0x01EB, 1, 0}, {0x01EB, 0x01EA, 0x01EB, 0, 1}, {0x01EC, 0x01EC, 0x01ED, 1, 0}, {0x01ED, 0x01EC, 0x01ED, 0, 1},
    {0x01EE, 0x01EE, 0x01EF, 1, 0}, {0x01EF, 0x01EE, 0x01EF, 0, 1}, {0x01F0, 0x01F0, 0x01F0, 0, 1}, {0x01F1, 0x01F1, 0x01F3, 1, 0},
    {0x01F2, 0x01F1, 0x01F3, 0, 0}, {0x01F3, 0x01F1, 0x01F3, 0, 1}, {0x01F4, 0x01F4, 0x01F5, 1, 0}, {0x01F5, 0x01F4, 0x01F5, 0, 1},
    {0x01F6, 0x01F6, 0x0195, 1, 0}, {0x01F7, 0x01F7, 0x01BF, 1, 0}, {0x01F8, 0x01F8, 0x01F9, 1, 0}, {0x01F9, 0x01F8, 0x01F9, 0, 1},
    {0x01FA, 0x01FA, 0x01FB, 1, 0}, {0x01FB, 0x01FA, 0x01FB, 0, 1}, {0x01FC, 0x01FC, 0x01FD, 1, 0}, {0x01FD, 0x01FC, 0x01FD, 0, 1},
    {0x01FE, 0x01FE, 0x01FF, 1, 0}, {0x01FF, 0x01FE, 0x01FF, 0, 1}, {0x0200, 0x0200, 0x0201, 1, 0}, {0x0201, 0x0200, 0x0201, 0, 1},
    {0x0202, 0x0202, 0x0203, 1, 0}, {0x0203, 0x0202, 0x0203, 0, 1}, {0x0204, 0x0204, 0x0205, 1, 0}, {0x0205, 0x0204, 0x0205, 0, 1},
    {0x0206, 0x0206, 0x0207, 1, 0}, {0x0207, 0x0206, 0x0207, 0, 1}, {0x0208, 0x0208, 0x0209, 1, 0}, {0x0209, 0x0208, 0x0209, 0, 1},
    {0x020A, 0x020A, 0x020B, 1, 0}, {0x020B, 0x020A, 0x020B, 0, 1}, {0x020C, 0x020C, 0x020D, 1, 0}, {0x020D, 0x020C, 0x020D, 0, 1},
    {0x020E, 0x020E, 0x020F, 1, 0}, {0x020F, 0x020E, 0x020F, 0, 1}, {0x0210, 0x0210, 0x0211, 1, 0}, {0x0211, 0x0210, 0x0211, 0, 1},
    {0x0212, 0x0212, 0x0213, 1, 0}, {0x0213, 0x0212, 0x0213, 0, 1}, {0x0214, 0x0214, 0x0215, 1, 0}, {0x0215, 0x0214, 0x0215, 0, 1},
    {0x0216, 0x0216, 0x0217, 1, 0}, {0x0217, 0x0216, 0x0217, 0, 1}, {0x0218, 0x0218, 0x0219, 1, 0}, {0x0219, 0x0218, 0x0219, 0, 1},
    {0x021A, 0x021A, 0x021B, 1, 0}, {0x021B, 0x021A, 0x021B, 0, 1}, {0x021C, 0x021C, 0x021D, 1, 0}, {0x021D, 0x021C, 0x021D, 0, 1},
    {0x021E, 0x021E, 0x021F, 1, 0}, {0x021F, 0x021E, 0x021F, 0, 1}, {0x0220, 0x0220, 0x019E, 1, 0}, {0x0221, 0x0221, 0x0221, 0, 1},
    {0x0222, 0x0222, 0x0223, 1, 0}, {0x0223, 0x0222, 0x0223, 0, 1}, {0x0224, 0x0224, 0x0225, 1, 0}, {0x0225, 0x0224, 0x0225, 0, 1},
    {0x0226, 0x0226, 0x0227, 1, 0}, {0x0227, 0x0226, 0x0227, 0, 1}, {0x0228, 0x0228, 0x0229, 1, 0}, {0x0229, 0x0228, 0x0229, 0, 1},
    {0x022A, 0x022A, 0x022B, 1, 0}, {0x022B, 0x022A, 0x022B, 0, 1}, {0x022C, 0x022C, 0x022D, 1, 0}, {0x022D, 0x022C, 0x022D, 0, 1},
    {0x022E, 0x022E, 0x022F, 1, 0}, {0x022F, 0x022E, 0x022F, 0, 1}, {0x0230, 0x0230, 0x0231, 1, 0}, {0x0231, 0x0230, 0x0231, 0, 1},
    {0x0232, 0x0232, 0x0233, 1, 0}, {0x0233, 0x0232, 0x0233, 0, 1}, {0x0234, 0x0234, 0x0234, 0, 1}, {0x0235, 0x0235, 0x0235, 0, 1},
    {0x0236, 0x0236, 0x0236, 0, 1}, {0x0237, 0x0237, 0x0237, 0, 1}, {0x0238, 0x0238, 0x0238, 0, 1}, {0x0239, 0x0239, 0x0239, 0, 1},
    {0x023A, 0x023A, 0x2C65, 1, 0}, {0x023B, 0x023B, 0x023C, 1, 0}, {0x023C, 0x023B, 0x023C, 0, 1}, {0x023D, 0x023D, 0x019A, 1, 0},
    {0x023E, 0x023E, 0x2C66, 1, 0}, {0x023F, 0x2C7E, 0x023F, 0, 1}, {0x0240, 0x2C7F, 0x0240, 0, 1}, {0x0241, 0x0241, 0x0242, 1, 0},
    {0x0242, 0x0241, 0x0242, 0, 1}, {0x0243, 0x0243, 0x0180, 1, 0}, {0x0244, 0x0244, 0x0289, 1, 0}, {0x0245, 0x0245, 0x028C, 1, 0},
    {0x0246, 0x0246, 0x0247, 1, 0}, {0x0247, 0x0246, 0x0247, 0, 1}, {0x0248, 0x0248, 0x0249, 1, 0}, {0x0249, 0x0248, 0x0249, 0, 1},
    {0x024A, 0x024A, 0x024B, 1, 0}, {0x024B, 0x024A, 0x024B, 0, 1}, {0x024C, 0x024C, 0x024D, 1, 0}, {0x024D, 0x024C, 0x024D, 0, 1},
    {0x024E, 0x024E, 0x024F, 1, 0}, {0x024F, 0x024E, 0x024F, 0, 1},
};

struct ComposeEntry {
  uint16_t base;
  uint16_t mark;
  uint16_t composed;
};

// Canonical (base, combining mark) pairs composing into U+00C0..U+024F,
// generated from the Unicode character database, sorted by (base, mark).
constexpr ComposeEntry kLatinCompose[] = {
    {0x0041, 0x0300, 0x00C0}, {0x0041, 0x0301, 0x00C1}, {0x0041, 0x0302, 0x00C2}, {0x0041, 0x0303, 0x00C3},
    {0x0041, 0x0304, 0x0100}, {0x0041, 0x0306, 0x0102}, {0x0041, 0x0307, 0x0226}, {0x0041, 0x0308, 0x00C4},
    {0x0041, 0x030A, 0x00C5}, {0x0041, 0x030C, 0x01CD}, {0x0041, 0x030F, 0x0200}, {0x0041, 0x0311, 0x0202},
    {0x0041, 0x0328, 0x0104}, {0x0043, 0x0301, 0x0106}, {0x0043, 0x0302, 0x0108}, {0x0043, 0x0307, 0x010A},
    {0x0043, 0x030C, 0x010C}, {0x0043, 0x0327, 0x00C7}, {0x0044, 0x030C, 0x010E}, {0x0045, 0x0300, 0x00C8},
    {0x0045, 0x0301, 0x00C9}, {0x0045, 0x0302, 0x00CA}, {0x0045, 0x0304, 0x0112}, {0x0045, 0x0306, 0x0114},
    {0x0045, 0x0307, 0x0116}, {0x0045, 0x0308, 0x00CB}, {0x0045, 0x030C, 0x011A}, {0x0045, 0x030F, 0x0204},
    {0x0045, 0x0311, 0x0206}, {0x0045, 0x0327, 0x0228}, {0x0045, 0x0328, 0x0118}, {0x0047, 0x0301, 0x01F4},
    {0x0047, 0x0302, 0x011C}, {0x0047, 0x0306, 0x011E}, {0x0047, 0x0307, 0x0120}, {0x0047, 0x030C, 0x01E6},
    {0x0047, 0x0327, 0x0122}, {0x0048, 0x0302, 0x0124}, {0x0048, 0x030C, 0x021E}, {0x0049, 0x0300, 0x00CC},
    {0x0049, 0x0301, 0x00CD}, {0x0049, 0x0302, 0x00CE}, {0x0049, 0x0303, 0x0128}, {0x0049, 0x0304, 0x012A},
    {0x0049, 0x0306, 0x012C}, {0x0049, 0x0307, 0x0130}, {0x0049, 0x0308, 0x00CF}, {0x0049, 0x030C, 0x01CF},
    {0x0049, 0x030F, 0x0208}, {0x0049, 0x0311, 0x020A}, {0x0049, 0x0328, 0x012E}, {0x004A, 0x0302, 0x0134},
    {0x004B, 0x030C, 0x01E8}, {0x004B, 0x0327, 0x0136}, {0x004C, 0x0301, 0x0139}, {0x004C, 0x030C, 0x013D},
    {0x004C, 0x0327, 0x013B}, {0x004E, 0x0300, 0x01F8}, {0x004E, 0x0301, 0x0143}, {0x004E, 0x0303, 0x00D1},
    {0x004E, 0x030C, 0x0147}, {0x004E, 0x0327, 0x0145}, {0x004F, 0x0300, 0x00D2}, {0x004F, 0x0301, 0x00D3},
    {0x004F, 0x0302, 0x00D4}, {0x004F, 0x0303, 0x00D5}, {0x004F, 0x0304, 0x014C}, {0x004F, 0x0306, 0x014E},
    {0x004F, 0x0307, 0x022E}, {0x004F, 0x0308, 0x00D6}, {0x004F, 0x030B, 0x0150}, {0x004F, 0x030C, 0x01D1},
    {0x004F, 0x030F, 0x020C}, {0x004F, 0x0311, 0x020E}, {0x004F, 0x031B, 0x01A0}, {0x004F, 0x0328, 0x01EA},
    {0x0052, 0x0301, 0x0154}, {0x0052, 0x030C, 0x0158}, {0x0052, 0x030F, 0x0210}, {0x0052, 0x0311, 0x0212},
    {0x0052, 0x0327, 0x0156}, {0x0053, 0x0301, 0x015A}, {0x0053, 0x0302, 0x015C}, {0x0053, 0x030C, 0x0160},
    {0x0053, 0x0326, 0x0218}, {0x0053, 0x0327, 0x015E}, {0x0054, 0x030C, 0x0164}, {0x0054, 0x0326, 0x021A},
    {0x0054, 0x0327, 0x0162}, {0x0055, 0x0300, 0x00D9}, {0x0055, 0x0301, 0x00DA}, {0x0055, 0x0302, 0x00DB},
    {0x0055, 0x0303, 0x0168}, {0x0055, 0x0304, 0x016A}, {0x0055, 0x0306, 0x016C}, {0x0055, 0x0308, 0x00DC},
    {0x0055, 0x030A, 0x016E}, {0x0055, 0x030B, 0x0170}, {0x0055, 0x030C, 0x01D3}, {0x0055, 0x030F, 0x0214},
    {0x0055, 0x0311, 0x0216}, {0x0055, 0x031B, 0x01AF}, {0x0055, 0x0328, 0x0172}, {0x0057, 0x0302, 0x0174},
    {0x0059, 0x0301, 0x00DD}, {0x0059, 0x0302, 0x0176}, {0x0059, 0x0304, 0x0232}, {0x0059, 0x0308, 0x0178},
    {0x005A, 0x0301, 0x0179}, {0x005A, 0x0307, 0x017B}, {0x005A, 0x030C, 0x017D}, {0x0061, 0x0300, 0x00E0},
    {0x0061, 0x0301, 0x00E1}, {0x0061, 0x0302, 0x00E2}, {0x0061, 0x0303, 0x00E3}, {0x0061, 0x0304, 0x0101},
    {0x0061, 0x0306, 0x0103}, {0x0061, 0x0307, 0x0227}, {0x0061, 0x0308, 0x00E4}, {0x0061, 0x030A, 0x00E5},
    {0x0061, 0x030C, 0x01CE}, {0x0061, 0x030F, 0x0201}, {0x0061, 0x0311, 0x0203}, {0x0061, 0x0328, 0x0105},
    {0x0063, 0x0301, 0x0107}, {0x0063, 0x0302, 0x0109}, {0x0063, 0x0307, 0x010B}, {0x0063, 0x030C, 0x010D},
    {0x0063, 0x0327, 0x00E7}, {0x0064, 0x030C, 0x010F}, {0x0065, 0x0300, 0x00E8}, {0x0065, 0x0301, 0x00E9},
    {0x0065, 0x0302, 0x00EA}, {0x0065, 0x0304, 0x0113}, {0x0065, 0x0306, 0x0115}, {0x0065, 0x0307, 0x0117},
    {0x0065, 0x0308, 0x00EB}, {0x0065, 0x030C, 0x011B}, {0x0065, 0x030F, 0x0205}, {0x0065, 0x0311, 0x0207},
    {0x0065, 0x0327, 0x0229}, {0x0065, 0x0328, 0x0119}, {0x0067, 0x0301, 0x01F5}, {0x0067, 0x0302, 0x011D},
    {0x0067, 0x0306, 0x011F}, {0x0067, 0x0307, 0x0121}, {0x0067, 0x030C, 0x01E7}, {0x0067, 0x0327, 0x0123},
    {0x0068, 0x0302, 0x0125}, {0x0068, 0x030C, 0x021F}, {0x0069, 0x0300, 0x00EC}, {0x0069, 0x0301, 0x00ED},
    {0x0069, 0x0302, 0x00EE}, {0x0069, 0x0303, 0x0129}, {0x0069, 0x0304, 0x012B}, {0x0069, 0x0306, 0x012D},
    {0x0069, 0x0308, 0x00EF}, {0x0069, 0x030C, 0x01D0}, {0x0069, 0x030F, 0x0209}, {0x0069, 0x0311, 0x020B},
    {0x0069, 0x0328, 0x012F}, {0x006A, 0x0302, 0x0135}, {0x006A, 0x030C, 0x01F0}, {0x006B, 0x030C, 0x01E9},
    {0x006B, 0x0327, 0x0137}, {0x006C, 0x0301, 0x013A}, {0x006C, 0x030C, 0x013E}, {0x006C, 0x0327, 0x013C},
    {0x006E, 0x0300, 0x01F9}, {0x006E, 0x0301, 0x0144}, {0x006E, 0x0303, 0x00F1}, {0x006E, 0x030C, 0x0148},
    {0x006E, 0x0327, 0x0146}, {0x006F, 0x0300, 0x00F2}, {0x006F, 0x0301, 0x00F3}, {0x006F, 0x0302, 0x00F4},
    {0x006F, 0x0303, 0x00F5}, {0x006F, 0x0304, 0x014D}, {0x006F, 0x0306, 0x014F}, {0x006F, 0x0307, 0x022F},
    {0x006F, 0x0308, 0x00F6}, {0x006F, 0x030B, 0x0151}, {0x006F, 0x030C, 0x01D2}, {0x006F, 0x030F, 0x020D},
    {0x006F, 0x0311, 0x020F}, {0x006F, 0x031B, 0x01A1}, {0x006F, 0x0328, 0x01EB}, {0x0072, 0x0301, 0x0155},
    {0x0072, 0x030C, 0x0159}, {0x0072, 0x030F, 0x0211}, {0x0072, 0x0311, 0x0213}, {0x0072, 0x0327, 0x0157},
    {0x0073, 0x0301, 0x015B}, {0x0073, 0x0302, 0x015D}, {0x0073, 0x030C, 0x0161}, {0x0073, 0x0326, 0x0219},
    {0x0073, 0x0327, 0x015F}, {0x0074, 0x030C, 0x0165}, {0x0074, 0x0326, 0x021B}, {0x0074, 0x0327, 0x0163},
    {0x0075, 0x0300, 0x00F9}, {0x0075, 0x0301, 0x00FA}, {0x0075, 0x0302, 0x00FB}, {0x0075, 0x0303, 0x0169},
    {0x0075, 0x0304, 0x016B}, {0x0075, 0x0306, 0x016D}, {0x0075, 0x0308, 0x00FC}, {0x0075, 0x030A, 0x016F},
    {0x0075, 0x030B, 0x0171}, {0x0075, 0x030C, 0x01D4}, {0x0075, 0x030F, 0x0215}, {0x0075, 0x0311, 0x0217},
    {0x0075, 0x031B, 0x01B0}, {0x0075, 0x0328, 0x0173}, {0x0077, 0x0302, 0x0175}, {0x0079, 0x0301, 0x00FD},
    {0x0079, 0x0302, 0x0177}, {0x0079, 0x0304, 0x0233}, {0x0079, 0x0308, 0x00FF}, {0x007A, 0x0301, 0x017A},
    {0x007A, 0x0307, 0x017C}, {0x007A, 0x030C, 0x017E}, {0x00C4, 0x0304, 0x01DE}, {0x00C5, 0x0301, 0x01FA},
    {0x00C6, 0x0301, 0x01FC}, {0x00C6, 0x0304, 0x01E2}, {0x00D5, 0x0304, 0x022C}, {0x00D6, 0x0304, 0x022A},
    {0x00D8, 0x0301, 0x01FE}, {0x00DC, 0x0300, 0x01DB}, {0x00DC, 0x0301, 0x01D7}, {0x00DC, 0x0304, 0x01D5},
    {0x00DC, 0x030C, 0x01D9}, {0x00E4, 0x0304, 0x01DF}, {0x00E5, 0x0301, 0x01FB}, {0x00E6, 0x0301, 0x01FD},
    {0x00E6, 0x0304, 0x01E3}, {0x00F5, 0x0304, 0x022D}, {0x00F6, 0x0304, 0x022B}, {0x00F8, 0x0301, 0x01FF},
    {0x00FC, 0x0300, 0x01DC}, {0x00FC, 0x0301, 0x01D8}, {0x00FC, 0x0304, 0x01D6}, {0x00FC, 0x030C, 0x01DA},
    {0x01B7, 0x030C, 0x01EE}, {0x01EA, 0x0304, 0x01EC}, {0x01EB, 0x0304, 0x01ED}, {0x0226, 0x0304, 0x01E0},
    {0x0227, 0x0304, 0x01E1}, {0x022E, 0x0304, 0x0230}, {0x022F, 0x0304, 0x0231}, {0x0292, 0x030C, 0x01EF},
};

const CaseEntry* find_case(char32_t c) {
  if (c < 0xC0 || c > 0x24F) return nullptr;
  auto it = std::lower_bound(std::begin(kLatinCase), std::end(kLatinCase), c,
                             [](const CaseEntry& e, char32_t v) { return e.cp < v; });
  if (it == std::end(kLatinCase) || it->cp != c) return nullptr;
  return it;
}

}  // namespace

bool try_decode(std::string_view bytes, std::vector<char32_t>* out) {
  out->clear();
  out->reserve(bytes.size());
  size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const size_t n = bytes.size();
  while (i < n) {
    unsigned char b0 = p[i];
    if (b0 < 0x80) {
      out->push_back(b0);
      i += 1;
      continue;
    }
    int extra;
    char32_t cp;
    char32_t min_cp;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1; cp = b0 & 0x1F; min_cp = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2; cp = b0 & 0x0F; min_cp = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3; cp = b0 & 0x07; min_cp = 0x10000;
    } else {
      return false;
    }
    if (i + extra >= n) return false;
    for (int k = 1; k <= extra; ++k) {
      unsigned char b = p[i + k];
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min_cp || cp > 0x10FFFF) return false;
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;
    out->push_back(cp);
    i += 1 + extra;
  }
  return true;
}

std::vector<char32_t> decode(std::string_view bytes) {
  std::vector<char32_t> out;
  if (!try_decode(bytes, &out)) {
    throw ParseError("invalid UTF-8 input");
  }
  return out;
}

std::string encode_one(char32_t c) {
  std::string s;
  if (c < 0x80) {
    s += static_cast<char>(c);
  } else if (c < 0x800) {
    s += static_cast<char>(0xC0 | (c >> 6));
    s += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    s += static_cast<char>(0xE0 | (c >> 12));
    s += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (c >> 18));
    s += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (c & 0x3F));
  }
  return s;
}

std::string encode(const std::vector<char32_t>& scalars) {
  std::string s;
  s.reserve(scalars.size());
  for (char32_t c : scalars) s += encode_one(c);
  return s;
}

bool is_letter(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  if (c >= 0xC0 && c <= 0x24F) return find_case(c) != nullptr;
  if (c == 0xB5) return true;                     // micro sign, categorised Ll
  if (c >= 0x370 && c <= 0x3FF) return c != 0x374 && c != 0x375 && c != 0x37E &&
                                       c != 0x384 && c != 0x385 && c != 0x387;
  if (c >= 0x400 && c <= 0x4FF) return true;      // Cyrillic
  return false;
}

bool is_upper(char32_t c) {
  if (c < 0x80) return c >= 'A' && c <= 'Z';
  if (const CaseEntry* e = find_case(c)) return e->is_upper != 0;
  if (c >= 0x391 && c <= 0x3AB) return c != 0x3A2;  // Greek capitals
  if (c >= 0x400 && c <= 0x42F) return true;        // Cyrillic capitals
  return false;
}

bool is_lower(char32_t c) {
  if (c < 0x80) return c >= 'a' && c <= 'z';
  if (const CaseEntry* e = find_case(c)) return e->is_lower != 0;
  if (c >= 0x3B1 && c <= 0x3CB) return true;
  if (c >= 0x430 && c <= 0x45F) return true;
  return false;
}

char32_t to_upper(char32_t c) {
  if (c >= 'a' && c <= 'z') return c - 0x20;
  if (const CaseEntry* e = find_case(c)) return e->upper;
  if (c >= 0x3B1 && c <= 0x3CB && c != 0x3C2) return c - 0x20;
  if (c >= 0x430 && c <= 0x44F) return c - 0x20;
  if (c >= 0x450 && c <= 0x45F) return c - 0x50;
  return c;
}

char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (const CaseEntry* e = find_case(c)) return e->lower;
  if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

bool is_whitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

std::vector<char32_t> compose_latin(const std::vector<char32_t>& scalars) {
  std::vector<char32_t> out;
  out.reserve(scalars.size());
  for (char32_t c : scalars) {
    if (!out.empty() && c >= 0x300 && c <= 0x36F && out.back() <= 0xFFFF) {
      ComposeEntry key{static_cast<uint16_t>(out.back()),
                       static_cast<uint16_t>(c), 0};
      auto it = std::lower_bound(
          std::begin(kLatinCompose), std::end(kLatinCompose), key,
          [](const ComposeEntry& a, const ComposeEntry& b) {
            return a.base != b.base ? a.base < b.base : a.mark < b.mark;
          });
      if (it != std::end(kLatinCompose) && it->base == key.base &&
          it->mark == key.mark) {
        out.back() = it->composed;
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace contra::utf8
