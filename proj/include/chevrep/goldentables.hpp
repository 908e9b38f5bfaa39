// Frozen expected values shared by the unit tests, the verify-tables
// subcommand, and the acceptance runner: class tables for the small
// symplectic and orthogonal groups, and invariant values for subdiagram
// classes of the exceptional types.  Keeping them in one place means a
// transcription fix lands everywhere at once.

#pragma once

#include <cstdint>
#include <vector>

#include "chevrep/chevalley.hpp"

namespace chevrep {

// A class table row: the supporting roots together with the expected
// decompositions by characteristic and kind.  Null means "not applicable".
struct GoldenRow {
    std::vector<const char*> roots;
    const char* nil_odd;
    const char* nil_two;
    const char* uni_odd;
    const char* uni_two;
};

struct GoldenTable {
    char type;
    int rank;
    const char* name;
    std::vector<GoldenRow> rows;
};

inline const std::vector<GoldenTable>& golden_class_tables() {
    // symplectic rows state one decomposition for both kinds per characteristic
    auto sp = [](std::vector<const char*> roots, const char* odd, const char* two,
                 bool nilp_only = false) {
        return GoldenRow{std::move(roots), odd, two, nilp_only ? nullptr : odd,
                         nilp_only ? nullptr : two};
    };
    static const std::vector<GoldenTable> tables = {
        {'C', 2, "Sp4",
         {
             sp({}, "W(1)^2", "W(1)^2"),
             sp({"10"}, "W(2)", "W(2)"),
             sp({"01"}, "W(1) + V(2)", "W(1) + V(2)"),
             sp({"01", "21"}, nullptr, "V(2)^2"),
             sp({"10", "01"}, "V(4)", "V(4)"),
         }},
        {'C', 3, "Sp6",
         {
             sp({}, "W(1)^3", "W(1)^3"),
             sp({"100", "010"}, "W(3)", "W(3)"),
             sp({"100"}, "W(2) + W(1)", "W(2) + W(1)"),
             sp({"100", "001"}, "W(2) + V(2)", "W(2) + V(2)"),
             sp({"010", "001"}, "W(1) + V(4)", "W(1) + V(4)"),
             sp({"001", "221"}, nullptr, "W(1) + V(2)^2"),
             sp({"001"}, "W(1)^2 + V(2)", "W(1)^2 + V(2)"),
             sp({"010", "001", "221"}, "V(4) + V(2)", "V(4) + V(2)"),
             sp({"100", "010", "001"}, "V(6)", "V(6)"),
             sp({"100", "010", "221"}, nullptr, "W_1(3)", true),
         }},
        {'C', 4, "Sp8",
         {
             sp({}, "W(1)^4", "W(1)^4"),
             sp({"1000", "0100", "0010"}, "W(4)", "W(4)"),
             sp({"1000", "0100"}, "W(3) + W(1)", "W(3) + W(1)"),
             sp({"1000", "0100", "0001"}, "W(3) + V(2)", "W(3) + V(2)"),
             sp({"1000", "0010"}, "W(2)^2", "W(2)^2"),
             sp({"1000"}, "W(2) + W(1)^2", "W(2) + W(1)^2"),
             sp({"1000", "0001"}, "W(2) + W(1) + V(2)", "W(2) + W(1) + V(2)"),
             sp({"0100", "0001", "2221"}, nullptr, "W(2) + V(2)^2"),
             sp({"1000", "0010", "0001"}, "W(2) + V(4)", "W(2) + V(4)"),
             sp({"0001"}, "W(1)^3 + V(2)", "W(1)^3 + V(2)"),
             sp({"0001", "2221"}, nullptr, "W(1)^2 + V(2)^2"),
             sp({"0010", "0001"}, "W(1)^2 + V(4)", "W(1)^2 + V(4)"),
             sp({"0010", "0001", "2221"}, "W(1) + V(4) + V(2)", "W(1) + V(4) + V(2)"),
             sp({"0100", "0010", "0001"}, "W(1) + V(6)", "W(1) + V(6)"),
             sp({"0010", "0001", "0221", "2221"}, nullptr, "V(4) + V(2)^2"),
             sp({"1000", "0010", "0001", "0221"}, nullptr, "V(4)^2"),
             sp({"0100", "0010", "0001", "2221"}, "V(6) + V(2)", "V(6) + V(2)"),
             sp({"1000", "0100", "0010", "0001"}, "V(8)", "V(8)"),
             sp({"1000", "0100", "0010", "2221"}, nullptr, "W_1(4)", true),
             sp({"0100", "0010", "0221"}, nullptr, "W_1(3) + W(1)", true),
         }},
        {'B', 3, "SO7",
         {
             {{}, "W(1)^3 + V(1)", "W(1)^3 + D(1)", "W(1)^3 + V(1)", "W(1)^3 + R"},
             {{"100", "010"}, "W(3) + V(1)", "W(3) + D(1)", "W(3) + V(1)", "W(3) + R"},
             {{"100"}, "W(2) + W(1) + V(1)", "W(2) + W(1) + D(1)", "W(2) + W(1) + V(1)",
              "W(2) + W(1) + R"},
             {{"100", "001"}, "W(2) + V(3)", "W(2) + D(2)", "W(2) + V(3)", "W(2) + V(2) + R"},
             {{"001"}, "W(1)^2 + V(3)", "W(1)^2 + D(2)", "W(1)^2 + V(3)", "W(1)^2 + V(2) + R"},
             {{"010", "001"}, "W(1) + V(5)", "W(1) + D(3)", "W(1) + V(5)", "W(1) + V(4) + R"},
             {{"100", "122"}, nullptr, "W_2(2) + W(1) + D(1)", nullptr, "W(1) + V(2)^2 + R"},
             {{"100", "010", "012"}, nullptr, "W_3(3) + D(1)", nullptr, "V(4) + V(2) + R"},
             {{"100", "010", "001"}, "V(7)", "D(4)", "V(7)", "V(6) + R"},
         }},
        {'D', 4, "SO8",
         {
             {{}, "W(1)^4", "W(1)^4", "W(1)^4", "W(1)^4"},
             {{"1000", "0100", "0010"}, "W(4)", "W(4)", "W(4)", "W(4)"},
             {{"1000", "0100", "0001"}, "W(4)", "W(4)", "W(4)", "W(4)"},
             {{"1000", "0100"}, "W(3) + W(1)", "W(3) + W(1)", "W(3) + W(1)", "W(3) + W(1)"},
             {{"1000", "0010"}, "W(2)^2", "W(2)^2", "W(2)^2", "W(2)^2"},
             {{"1000", "0001"}, "W(2)^2", "W(2)^2", "W(2)^2", "W(2)^2"},
             {{"1000"}, "W(2) + W(1)^2", "W(2) + W(1)^2", "W(2) + W(1)^2", "W(2) + W(1)^2"},
             {{"1000", "0010", "0001"}, "W(2) + V(3) + V(1)", "W(2) + W_2(2)",
              "W(2) + V(3) + V(1)", "W(2) + V(2)^2"},
             {{"0010", "0001"}, "W(1)^2 + V(3) + V(1)", "W(1)^2 + W_2(2)",
              "W(1)^2 + V(3) + V(1)", "W(1)^2 + V(2)^2"},
             {{"0100", "0010", "0001"}, "W(1) + V(5) + V(1)", "W(1) + W_3(3)",
              "W(1) + V(5) + V(1)", "W(1) + V(4) + V(2)"},
             {{"1000", "0100", "0010", "1101"}, "V(5) + V(3)", "W_3(4)", "V(5) + V(3)",
              "V(4)^2"},
             {{"1000", "0100", "0010", "0001"}, "V(7) + V(1)", "W_4(4)", "V(7) + V(1)",
              "V(6) + V(2)"},
         }},
        {'D', 5, "SO10",
         {
             {{}, "W(1)^5", "W(1)^5", "W(1)^5", "W(1)^5"},
             {{"10000", "01000", "00100", "00010"}, "W(5)", "W(5)", "W(5)", "W(5)"},
             {{"10000", "01000", "00100"}, "W(4) + W(1)", "W(4) + W(1)", "W(4) + W(1)",
              "W(4) + W(1)"},
             {{"10000", "01000", "00010"}, "W(3) + W(2)", "W(3) + W(2)", "W(3) + W(2)",
              "W(3) + W(2)"},
             {{"10000", "01000"}, "W(3) + W(1)^2", "W(3) + W(1)^2", "W(3) + W(1)^2",
              "W(3) + W(1)^2"},
             {{"10000", "00100"}, "W(2)^2 + W(1)", "W(2)^2 + W(1)", "W(2)^2 + W(1)",
              "W(2)^2 + W(1)"},
             {{"10000"}, "W(2) + W(1)^3", "W(2) + W(1)^3", "W(2) + W(1)^3", "W(2) + W(1)^3"},
             {{"10000", "01000", "00010", "00001"}, "W(3) + V(3) + V(1)", "W(3) + W_2(2)",
              "W(3) + V(3) + V(1)", "W(3) + V(2)^2"},
             {{"10000", "00010", "00001"}, "W(2) + W(1) + V(3) + V(1)", "W(2) + W(1) + W_2(2)",
              "W(2) + W(1) + V(3) + V(1)", "W(2) + W(1) + V(2)^2"},
             {{"00010", "00001"}, "W(1)^3 + V(3) + V(1)", "W(1)^3 + W_2(2)",
              "W(1)^3 + V(3) + V(1)", "W(1)^3 + V(2)^2"},
             {{"10000", "00100", "00010", "00001"}, "W(2) + V(5) + V(1)", "W(2) + W_3(3)",
              "W(2) + V(5) + V(1)", "W(2) + V(4) + V(2)"},
             {{"00100", "00010", "00001"}, "W(1)^2 + V(5) + V(1)", "W(1)^2 + W_3(3)",
              "W(1)^2 + V(5) + V(1)", "W(1)^2 + V(4) + V(2)"},
             {{"01000", "00100", "00010", "01101"}, "W(1) + V(5) + V(3)", "W(1) + W_3(4)",
              "W(1) + V(5) + V(3)", "W(1) + V(4)^2"},
             {{"01000", "00100", "00010", "00001"}, "W(1) + V(7) + V(1)", "W(1) + W_4(4)",
              "W(1) + V(7) + V(1)", "W(1) + V(6) + V(2)"},
             {{"10000", "01000", "00100", "00010", "01101"}, "V(7) + V(3)", "W_4(5)",
              "V(7) + V(3)", "V(6) + V(4)"},
             {{"10000", "01000", "00100", "00010", "00001"}, "V(9) + V(1)", "W_5(5)",
              "V(9) + V(1)", "V(8) + V(2)"},
         }},
    };
    return tables;
}

// Published invariant values for nilpotent subdiagram classes of the
// exceptional types.  One row per (class, characteristic, lattice); only the
// fields a published table states are filled in, the rest stay unchecked
// (empty vector / -1).
struct GoldenProfileRow {
    char type;
    int rank;
    uint32_t p;
    Lattice lattice;
    const char* label;
    std::vector<int> ds;
    std::vector<int> nds;
    int alg = -1;
    int alg_prime = -1;
};

inline const std::vector<GoldenProfileRow>& golden_profile_rows() {
    constexpr Lattice sc = Lattice::simply_connected;
    constexpr Lattice ad = Lattice::adjoint;
    static const std::vector<GoldenProfileRow> rows = {
        {'E', 6, 2, sc, "D_5", {12, 8, 6, 2, 0}, {}, -1, -1},
        {'E', 6, 2, sc, "D_4", {20, 17, 16}, {}, -1, -1},
        {'E', 6, 3, sc, "E_6", {}, {}, 31, -1},
        {'E', 6, 3, ad, "E_6", {}, {}, 24, -1},
        {'E', 7, 2, sc, "E_7", {}, {}, 62, -1},
        {'E', 7, 2, sc, "D_6", {}, {}, 58, -1},
        {'E', 7, 2, sc, "D_5", {}, {}, 70, -1},
        {'E', 7, 2, sc, "D_4", {}, {}, 66, -1},
        {'E', 7, 2, ad, "E_7", {}, {}, 56, -1},
        {'E', 7, 2, ad, "D_6", {}, {}, 52, -1},
        {'E', 7, 2, ad, "D_5", {}, {}, 42, -1},
        {'E', 7, 2, ad, "D_4", {39, 35, 28}, {}, -1, -1},
        {'E', 7, 2, ad, "A_3", {}, {}, 55, -1},
        {'E', 7, 3, sc, "E_6", {15, 12, 9}, {}, -1, -1},
        {'E', 7, 3, sc, "A_6", {19, 17}, {}, -1, -1},
        {'E', 8, 2, sc, "E_8", {}, {}, 79, 74},
        {'E', 8, 2, sc, "E_7", {}, {}, 68, 64},
        {'E', 8, 2, sc, "D_7", {}, {}, 69, 65},
        {'E', 8, 2, sc, "D_6", {}, {}, 71, 68},
        {'E', 8, 2, sc, "D_5", {}, {}, 64, 60},
        {'E', 8, 2, sc, "D_4", {}, {}, 88, 85},
        {'E', 8, 2, sc, "A_7", {}, {}, 85, 72},
        {'E', 8, 3, sc, "E_8", {}, {15, 18, 248}, -1, -1},
        {'E', 8, 3, sc, "E_6", {}, {36, 37, 59}, -1, -1},
        {'E', 8, 3, sc, "A_7", {}, {36, 36, 36}, -1, -1},
        {'E', 8, 3, sc, "A_6", {}, {41, 41}, -1, -1},
        {'E', 8, 5, sc, "E_8", {10, 7, 0}, {}, -1, -1},
    };
    return rows;
}

}  // namespace chevrep
