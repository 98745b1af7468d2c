#pragma once

// Reference decompositions used as expected values, written as
// "2V2 + V3_1 + ..." with V<p>_<q> for V_{p,q}.

#include "gkf/characters.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace gkf::testdata {

inline Decomposition dec(const std::string& text)
{
    Decomposition d;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "+") continue;
        const auto v = tok.find('V');
        const std::int64_t mult = v == 0 ? 1 : std::stoll(tok.substr(0, v));
        std::string label = tok.substr(v + 1);
        IrrepLabel l;
        const auto u = label.find('_');
        l.p = std::stoi(label.substr(0, u));
        l.q = u == std::string::npos ? 0 : std::stoi(label.substr(u + 1));
        d[l] += mult;
    }
    return d;
}

struct TensorCase {
    IrrepLabel a;
    IrrepLabel b;
    const char* expect;
};

// Every tensor product written out in full in the source tables.
inline const std::vector<TensorCase>& tensor_cases()
{
    static const std::vector<TensorCase> cases{
        {{3, 0}, {5, 0}, "V2 + V4 + V6 + V8 + V3_1 + V4_2 + V5_1 + V5_3 + V6_2 + V7_1"},
        {{3, 0}, {7, 0}, "V4 + V6 + V8 + V10 + V5_1 + V6_2 + V7_1 + V7_3 + V8_2 + V9_1"},
        {{4, 0}, {6, 0}, "V2 + V4 + V6 + V8 + V10 + V3_1 + V4_2 + V5_1 + V5_3 + V6_2 + V6_4 + V7_1 + V7_3 + V8_2 + V9_1"},
        {{0, 0}, {4, 0}, "V4"},
        {{1, 1}, {4, 0}, "V4 + V3_1 + V5_1"},
        {{2, 2}, {4, 0}, "V4 + V2_2 + V3_1 + V4_2 + V5_1 + V6_2"},
        {{3, 1}, {4, 0}, "V2 + V4 + V6 + V1_1 + V2_2 + 2V3_1 + V3_3 + 2V4_2 + 2V5_1 + V5_3 + V6_2 + V7_1"},
        {{3, 3}, {4, 0}, "V4 + V3_1 + V3_3 + V4_2 + V5_1 + V5_3 + V6_2 + V7_3"},
        {{4, 0}, {4, 0}, "V0 + V2 + V4 + V6 + V8 + V1_1 + V2_2 + V3_1 + V3_3 + V4_2 + V4_4 + V5_1 + V5_3 + V6_2 + V7_1"},
        {{4, 2}, {4, 0}, "V2 + V4 + V6 + V2_2 + 2V3_1 + V3_3 + 3V4_2 + V4_4 + 2V5_1 + 2V5_3 + 2V6_2 + V6_4 + V7_1 + V7_3 + V8_2"},
        {{4, 4}, {4, 0}, "V4 + V4_2 + V4_4 + V5_1 + V5_3 + V6_2 + V6_4 + V7_3 + V8_4"},
        {{5, 1}, {4, 0}, "V2 + V4 + V6 + V8 + V1_1 + V2_2 + 2V3_1 + V3_3 + 2V4_2 + V4_4 + 2V5_1 + 2V5_3 + V5_5 + 2V6_2 + V6_4 + 2V7_1 + V7_3 + V8_2 + V9_1"},
        {{5, 3}, {4, 0}, "V4 + V6 + V3_1 + V3_3 + 2V4_2 + V4_4 + 2V5_1 + 3V5_3 + V5_5 + 2V6_2 + 2V6_4 + V7_1 + 2V7_3 + V7_5 + V8_2 + V8_4 + V9_3"},
        {{5, 5}, {4, 0}, "V5_1 + V5_3 + V5_5 + V6_2 + V6_4 + V7_3 + V7_5 + V8_4 + V9_5"},
        {{6, 0}, {4, 0}, "V2 + V4 + V6 + V8 + V10 + V3_1 + V4_2 + V5_1 + V5_3 + V6_2 + V6_4 + V7_1 + V7_3 + V8_2 + V9_1"},
        {{6, 2}, {4, 0}, "V4 + V6 + V8 + V2_2 + V3_1 + V3_3 + 2V4_2 + V4_4 + 2V5_1 + 2V5_3 + V5_5 + 3V6_2 + 2V6_4 + V6_6 + 2V7_1 + 2V7_3 + V7_5 + 2V8_2 + V8_4 + V9_1 + V9_3 + V10_2"},
        {{6, 4}, {4, 0}, "V6 + V4_2 + V4_4 + V5_1 + 2V5_3 + V5_5 + 2V6_2 + 3V6_4 + V6_6 + V7_1 + 2V7_3 + 2V7_5 + V8_2 + 2V8_4 + V8_6 + V9_3 + V9_5 + V10_4"},
        {{6, 6}, {4, 0}, "V6_2 + V6_4 + V6_6 + V7_3 + V7_5 + V8_4 + V8_6 + V9_5 + V10_6"},
        {{7, 1}, {4, 0}, "V4 + V6 + V8 + V10 + V3_1 + V4_2 + 2V5_1 + V5_3 + 2V6_2 + V6_4 + 2V7_1 + 2V7_3 + V7_5 + 2V8_2 + V8_4 + 2V9_1 + V9_3 + V10_2 + V11_1"},
        {{7, 3}, {4, 0}, "V6 + V8 + V3_3 + V4_2 + V4_4 + V5_1 + 2V5_3 + V5_5 + 2V6_2 + 2V6_4 + V6_6 + 2V7_1 + 3V7_3 + 2V7_5 + V7_7 + 2V8_2 + 2V8_4 + V8_6 + V9_1 + 2V9_3 + V9_5 + V10_2 + V10_4 + V11_3"},
        {{8, 0}, {4, 0}, "V4 + V6 + V8 + V10 + V12 + V5_1 + V6_2 + V7_1 + V7_3 + V8_2 + V8_4 + V9_1 + V9_3 + V10_2 + V11_1"},
        {{8, 2}, {4, 0}, "V6 + V8 + V10 + V4_2 + V5_1 + V5_3 + 2V6_2 + V6_4 + 2V7_1 + 2V7_3 + V7_5 + 3V8_2 + 2V8_4 + V8_6 + 2V9_1 + 2V9_3 + V9_5 + 2V10_2 + V10_4 + V11_1 + V11_3 + V12_2"},
    };
    return cases;
}

inline const char* const kLambda2S3 = "V0 + V1_1 + V2_2 + V3_3 + V4 + V5_1";
inline const char* const kLambda2S4 = "V2 + V3_1 + V4_2 + V5_3 + V6 + V7_1";
inline const char* const kLambda2S5 = "V0 + V1_1 + V2_2 + V3_3 + V4 + V4_4 + V5_1 + V5_5 + V6_2 + V7_3 + V8 + V9_1";
inline const char* const kLambda3S3 = "V2_1 + 3V3 + V3_2 + 2V4_1 + V4_3 + 2V5_2 + V6_1 + V6_3 + V7";
inline const char* const kLambda4S3 =
    "3V0 + 4V4 + 2V6 + V8 + 2V1_1 + 4V2_2 + 3V3_1 + 4V3_3 + 3V4_2 + 3V4_4 + 5V5_1 + 2V5_3 + V5_5 + 4V6_2 + V6_4 + V6_6 "
    "+ V7_1 + 2V7_3 + V8_2";
inline const char* const kLambda6S3 =
    "4V0 + 6V1_1 + 2V2 + 10V2_2 + 10V3_1 + 12V3_3 + 13V4 + 14V4_2 + 9V4_4 + 19V5_1 + 14V5_3 + 7V5_5 + 7V6 + 18V6_2 "
    "+ 9V6_4 + 4V6_6 + 10V7_1 + 13V7_3 + 4V7_5 + 2V7_7 + 4V8 + 7V8_2 + 5V8_4 + V8_6 + 3V9_1 + 3V9_3 + 2V9_5 + V10 "
    "+ V10_2";
inline const char* const kC2W4 = "2V2 + V4 + 2V6 + V8 + 2V3_1 + 2V4_2 + V5_1 + 2V5_3 + V6_2 + 2V7_1";
inline const char* const kC3W4 =
    "V0 + 2V2 + 6V4 + 2V6 + 2V8 + 2V1_1 + 3V2_2 + 6V3_1 + 3V3_3 + 5V4_2 + 2V4_4 + 6V5_1 + 4V5_3 + V5_5 + 5V6_2 + V6_4 "
    "+ 3V7_1 + 2V7_3 + V8_2 + V9_1";
inline const char* const kC2W6 =
    "V0 + V2 + 3V4 + 2V6 + 3V8 + 2V10 + V1_1 + V2_2 + V3_1 + V3_3 + V4_2 + V4_4 + 3V5_1 + V5_3 + V5_5 + 3V6_2 + V6_4 "
    "+ 2V7_1 + 3V7_3 + 2V8_2 + 3V9_1";
inline const char* const kC3W6 =
    "V0 + 10V2 + 13V4 + 19V6 + 8V8 + 6V10 + V12 + 4V1_1 + 6V2_2 + 18V3_1 + 9V3_3 + 24V4_2 + 6V4_4 + 25V5_1 + 20V5_3 "
    "+ 4V5_5 + 22V6_2 + 13V6_4 + V6_6 + 20V7_1 + 16V7_3 + 5V7_5 + 16V8_2 + 5V8_4 + 10V9_1 + 7V9_3 + 4V10_2 + 3V11_1";
inline const char* const kLambda3S3xS5 =
    "9V2 + 13V4 + 13V6 + 10V8 + 2V10 + V12 + 3V1_1 + 6V2_2 + 18V3_1 + 8V3_3 + 23V4_2 + 7V4_4 + 22V5_1 + 22V5_3 + 4V5_5 "
    "+ 24V6_2 + 13V6_4 + 2V6_6 + 19V7_1 + 15V7_3 + 6V7_5 + 13V8_2 + 7V8_4 + V8_6 + 8V9_1 + 7V9_3 + V9_5 + 5V10_2 "
    "+ V10_4 + 2V11_1 + V11_3";
inline const char* const kLambda2S3xLambda2S4 =
    "18V2 + 22V4 + 26V6 + 12V8 + 5V10 + V12 + 6V1_1 + 12V2_2 + 34V3_1 + 15V3_3 + 45V4_2 + 13V4_4 + 41V5_1 + 39V5_3 "
    "+ 7V5_5 + 40V6_2 + 25V6_4 + 3V6_6 + 32V7_1 + 26V7_3 + 11V7_5 + 24V8_2 + 12V8_4 + 3V8_6 + 12V9_1 + 12V9_3 "
    "+ 2V9_5 + 7V10_2 + 3V10_4 + 4V11_1 + V11_3 + V12_2";
inline const char* const kC4W6 =
    "27V2 + 35V4 + 39V6 + 22V8 + 7V10 + 2V12 + 9V1_1 + 18V2_2 + 52V3_1 + 23V3_3 + 68V4_2 + 20V4_4 + 63V5_1 + 61V5_3 "
    "+ 11V5_5 + 64V6_2 + 38V6_4 + 5V6_6 + 51V7_1 + 41V7_3 + 17V7_5 + 37V8_2 + 19V8_4 + 4V8_6 + 20V9_1 + 19V9_3 "
    "+ 3V9_5 + 12V10_2 + 4V10_4 + 6V11_1 + 2V11_3 + V12_2";
inline const char* const kC5W6 =
    "4V0 + 17V2 + 41V4 + 29V6 + 20V8 + 5V10 + V12 + 12V1_1 + 23V2_2 + 45V3_1 + 27V3_3 + 59V4_2 + 24V4_4 + 61V5_1 "
    "+ 55V5_3 + 15V5_5 + 65V6_2 + 36V6_4 + 8V6_6 + 42V7_1 + 44V7_3 + 16V7_5 + 2V7_7 + 31V8_2 + 21V8_4 + 5V8_6 "
    "+ 18V9_1 + 15V9_3 + 6V9_5 + 10V10_2 + 4V10_4 + V10_6 + 3V11_1 + 3V11_3 + V12_2";

/// Length-4 labels in the unmodified stable product Lambda^2 S_3 (x) Lambda^2 S_4,
/// after the (i, j, 1, 1) labels have been folded away.
inline const std::vector<std::pair<std::vector<int>, int>>& raw_length_four()
{
    static const std::vector<std::pair<std::vector<int>, int>> raw{
        {{3, 2, 2, 1}, 8}, {{3, 3, 2, 2}, 1}, {{3, 3, 3, 1}, 4}, {{4, 2, 2, 2}, 3}, {{4, 3, 2, 1}, 12},
        {{4, 3, 3, 2}, 2}, {{4, 4, 2, 2}, 1}, {{4, 4, 3, 1}, 3}, {{5, 2, 2, 1}, 8}, {{5, 3, 2, 2}, 4},
        {{5, 3, 3, 1}, 4}, {{5, 3, 3, 3}, 1}, {{5, 4, 2, 1}, 8}, {{5, 4, 3, 2}, 1}, {{5, 5, 3, 1}, 2},
        {{6, 2, 2, 2}, 1}, {{6, 3, 2, 1}, 9}, {{6, 3, 3, 2}, 1}, {{6, 4, 2, 2}, 1}, {{6, 4, 3, 1}, 2},
        {{6, 5, 2, 1}, 2}, {{7, 2, 2, 1}, 5}, {{7, 3, 3, 1}, 3}, {{7, 4, 2, 1}, 2}, {{8, 3, 2, 1}, 2},
    };
    return raw;
}

} // namespace gkf::testdata
