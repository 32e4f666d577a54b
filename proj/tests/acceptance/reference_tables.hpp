// Copyright (c) weighted-pebbling contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string_view>

namespace wpeb::reference {

// Minimum weight making a path with n edges p-solvable; columns n = 2..7,
// empty where no value is published.
struct PathWeightRow {
    int p;
    std::array<std::string_view, 6> by_n;
};

inline constexpr PathWeightRow kPathWeights[] = {
    {1, {"2", "3", "4", "5", "6", "7"}},
    {2, {"3/2", "5/2", "7/2", "9/2", "11/2", "13/2"}},
    {3, {"4/3", "7/3", "10/3", "13/3", "16/3", "19/3"}},
    {4, {"1", "2", "3", "4", "5", "6"}},
    {5, {"1", "28/15", "43/15", "58/15", "73/15", "88/15"}},
    {6, {"5/6", "5/3", "8/3", "11/3", "14/3", "17/3"}},
    {7, {"5/6", "23/14", "37/14", "51/14", "65/14", "79/14"}},
    {8, {"3/4", "3/2", "5/2", "7/2", "9/2", "11/2"}},
    {9, {"2/3", "3/2", "22/9", "41/12", "53/12", "65/12"}},
    {10, {"2/3", "7/5", "7/3", "197/60", "257/60", "317/60"}},
    {11, {"7/11", "7/5", "149/66", "419/132", "551/132", "683/132"}},
    {12, {"7/12", "4/3", "13/6", "37/12", "49/12", "61/12"}},
    {13, {"7/12", "4/3", "13/6", "37/12", "49/12", ""}},
    {14, {"4/7", "9/7", "15/7", "106/35", "141/35", ""}},
    {15, {"8/15", "53/42", "31/15", "3", "4", ""}},
    {16, {"1/2", "37/30", "2", "44/15", "59/15", ""}},
    {17, {"1/2", "41/34", "2", "295/102", "397/102", ""}},
    {18, {"1/2", "7/6", "2", "17/6", "23/6", ""}},
    {19, {"9/19", "155/133", "371/190", "17/6", "289/76", ""}},
    {20, {"9/20", "79/70", "19/10", "14/5", "15/4", ""}},
    {21, {"9/20", "23/21", "19/10", "293/105", "1147/308", ""}},
    {22, {"9/20", "23/21", "19/10", "91/33", "485/132", ""}},
    {23, {"10/23", "197/184", "43/23", "187/69", "1001/276", ""}},
    {24, {"5/12", "25/24", "11/6", "8/3", "", ""}},
    {25, {"2/5", "25/24", "11/6", "8/3", "", ""}},
    {26, {"2/5", "40/39", "9/5", "241/91", "", ""}},
    {27, {"2/5", "1", "97/54", "493/189", "", ""}},
    {28, {"11/28", "1", "16/9", "18/7", "", ""}},
    {29, {"11/29", "287/290", "511/290", "18/7", "", ""}},
    {30, {"11/30", "29/30", "26/15", "77/30", "", ""}},
    {31, {"11/30", "29/30", "26/15", "15//62", "", ""}},
    {32, {"11/30", "169/176", "55/32", "5/2", "", ""}},
    {33, {"4/11", "31/33", "41/24", "5/2", "", ""}},
    {34, {"6/17", "31/33", "403/238", "5/2", "", ""}},
    {35, {"12/35", "14/15", "2003/1190", "", "", ""}},
    {36, {"1/3", "11/12", "349/210", "", "", ""}},
    {37, {"1/3", "11/12", "", "", "", ""}},
    {38, {"1/3", "451/494", "", "", "", ""}},
    {39, {"1/3", "35/39", "", "", "", ""}},
    {40, {"13/40", "139/156", "", "", "", ""}},
};

// Weight to carry p pebbles along a two-edge path and arrive with k; columns
// k = 3..6.
struct OneWayRow {
    int p;
    std::array<std::string_view, 4> by_k;
};

inline constexpr OneWayRow kOneWay[] = {
    {8, {"49/40", "17/12", "19/12", "97/56"}},
    {9, {"52/45", "4/3", "94/63", "103/63"}},
    {10, {"11/10", "19/15", "99/70", "31/20"}},
    {11, {"23/22", "93/77", "104/77", "65/44"}},
    {12, {"1", "97/84", "31/24", "17/12"}},
    {13, {"25/26", "101/91", "129/104", "53/39"}},
    {14, {"13/14", "15/14", "67/56", "55/42"}},
    {15, {"94/105", "31/30", "52/45", "19/15"}},
};

}  // namespace wpeb::reference
