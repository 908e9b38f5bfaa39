// Class labels, representative entries, and invariant profiles for the
// exceptional types, together with the recognizer that identifies a
// nilpotent orbit or unipotent class from its profile.  The per-(type, p,
// kind) choice of invariants, the eminent label lists, and the overgroup
// rows for distinguished non-eminent classes are fixed tables; profiles are
// always computed, never stored.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "chevrep/chevalley.hpp"
#include "chevrep/matrix.hpp"
#include "chevrep/modules.hpp"
#include "chevrep/series.hpp"

namespace chevrep {

// Conditions attached to table rows: "any", "p=2", "p!=3", "p<=3", "p>=5", "p>5".
inline bool char_condition_applies(const std::string& cond, uint32_t p) {
    if (cond.empty() || cond == "any") return true;
    auto num = [&](size_t off) { return static_cast<uint32_t>(std::stoul(cond.substr(off))); };
    if (cond.rfind("p!=", 0) == 0) return p != num(3);
    if (cond.rfind("p<=", 0) == 0) return p <= num(3);
    if (cond.rfind("p>=", 0) == 0) return p >= num(3);
    if (cond.rfind("p=", 0) == 0) return p == num(2);
    if (cond.rfind("p<", 0) == 0) return p < num(2);
    if (cond.rfind("p>", 0) == 0) return p > num(2);
    throw std::invalid_argument("unrecognized characteristic condition: " + cond);
}

struct OrbitLabel {
    std::string label;
    Kind kind = Kind::nilpotent;
    std::string char_condition = "any";
};

enum class RepSource { published_table, levi_regular, companion_reference };

struct RepresentativeEntry {
    char type = 0;  // ambient simple type letter
    int rank = 0;
    std::string label;
    Kind kind = Kind::nilpotent;
    std::string char_condition = "any";
    RepSource source = RepSource::levi_regular;
    std::vector<RootVec> support;  // positive roots, one term each
};

struct InvariantProfile {
    std::optional<Partition> jbs_min;
    std::optional<Partition> jbs_adj;
    std::optional<std::vector<int>> ds;
    std::optional<std::vector<int>> ls;
    std::optional<std::vector<int>> nds;
    std::optional<int> alg;
    std::optional<int> alg_prime;
    // the dispatch table asks for the nilradical dimension, which this
    // toolkit does not compute; the flag keeps the gap explicit
    bool nil_required = false;

    bool operator==(const InvariantProfile&) const = default;
};

// ---------------------------------------------------------------------------
// Which invariants identify a class, per (type, p, kind).
// ---------------------------------------------------------------------------
struct ProfileRequirements {
    bool jbs_min = false, jbs_adj = false;
    bool ds = false, ls = false, nds = false;
    bool alg = false, alg_prime = false, nil = false;
};

namespace detail {

inline void check_exceptional(char type, int rank) {
    bool ok = (type == 'G' && rank == 2) || (type == 'F' && rank == 4) ||
              (type == 'E' && rank >= 6 && rank <= 8);
    if (!ok) throw std::invalid_argument("exceptional type expected");
}

}  // namespace detail

inline ProfileRequirements profile_requirements(char type, int rank, uint32_t p, Kind kind) {
    detail::check_exceptional(type, rank);
    if (!is_prime(p)) throw std::invalid_argument("profile_requirements: p must be prime");
    ProfileRequirements r;
    bool nilp = (kind == Kind::nilpotent);
    if (type == 'G') {
        if (p != 3) r.jbs_min = true;
        else r.jbs_adj = true;
    } else if (type == 'F') {
        if (p == 2) { r.jbs_min = true; r.jbs_adj = true; r.ds = nilp; }
        else if (p == 3) { r.jbs_min = true; r.jbs_adj = true; }
        else r.jbs_min = true;
    } else if (rank == 6) {
        if (nilp) {
            if (p == 2) { r.jbs_adj = true; r.ds = true; }
            else if (p == 3) { r.jbs_adj = true; r.alg = true; }
            else r.jbs_min = true;
        } else {
            if (p == 3) r.jbs_adj = true;
            else r.jbs_min = true;
        }
    } else if (rank == 7) {
        if (p == 2) {
            r.jbs_adj = true;
            if (nilp) { r.ds = true; r.alg = true; }
            else r.ls = true;
        } else if (p == 3) {
            r.jbs_min = true; r.jbs_adj = true; r.ds = nilp;
        } else {
            r.jbs_min = true;
        }
    } else {
        r.jbs_adj = true;
        if (nilp) {
            if (p == 2) { r.ds = true; r.alg = true; r.alg_prime = true; }
            else if (p == 3) { r.nds = true; r.nil = true; }
            else if (p == 5) { r.ds = true; }
        } else {
            if (p == 2) r.ls = true;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Invariant profile of the element with the given positive-root support.
// Nilpotent: x = sum of e_beta (optionally signed).  Unipotent: the product
// of the one-parameter elements x_beta(1) in support order, handled through
// its adjoint matrix and, when required, its action on the minimal module.
// ---------------------------------------------------------------------------
inline InvariantProfile invariant_profile(char type, int rank, uint32_t p, Kind kind,
                                          const std::vector<RootVec>& support,
                                          const std::vector<int>& signs = {},
                                          Lattice lattice = Lattice::simply_connected) {
    ProfileRequirements req = profile_requirements(type, rank, p, kind);
    CHEVREP_CHECK(signs.empty() || signs.size() == support.size(),
                  "invariant_profile: sign list does not match the support");
    ChevalleyAlgebra alg(type, rank, p, lattice);
    InvariantProfile out;
    out.nil_required = req.nil;
    bool need_c = req.ds || req.ls || req.nds || req.alg || req.alg_prime;
    Subspace c(p, alg.dim());

    auto sign_at = [&](size_t i) { return signs.empty() ? 1 : signs[i]; };

    if (kind == Kind::nilpotent) {
        GfpVec x = alg.element_from_roots(support, signs);
        if (req.jbs_adj) out.jbs_adj = jordan_partition(alg.ad_matrix(x), Kind::nilpotent);
        if (req.jbs_min)
            out.jbs_min = jordan_partition(minimal_module(type, rank, p).action(x), Kind::nilpotent);
        if (need_c) c = centralizer(alg, x);
    } else {
        uint32_t minus_one = p - 1;
        GfpMat adu = GfpMat::identity(p, alg.dim());
        for (size_t i = 0; i < support.size(); ++i)
            adu = adu.mul(alg.unipotent_action(support[i], sign_at(i) > 0 ? 1 : minus_one));
        if (req.jbs_adj) out.jbs_adj = jordan_partition(adu, Kind::unipotent);
        if (req.jbs_min) {
            RepSpace vm = minimal_module(type, rank, p);
            GfpMat u = GfpMat::identity(p, vm.dim);
            for (size_t i = 0; i < support.size(); ++i) {
                int id = alg.z().id_of(support[i]);
                u = u.mul(vm.unipotent(id, sign_at(i) > 0 ? 1 : minus_one));
            }
            out.jbs_min = jordan_partition(u, Kind::unipotent);
        }
        if (need_c) c = centralizer(alg, adu);
    }

    if (req.ds || req.nds) {
        std::vector<Subspace> chain = derived_series(alg, c);
        if (req.ds) out.ds = series_dims(chain);
        if (req.nds) {
            std::vector<int> nd;
            for (const auto& term : chain) nd.push_back(normalizer(alg, term).dim());
            out.nds = std::move(nd);
        }
    }
    if (req.ls) out.ls = series_dims(lower_central_series(alg, c));
    if (req.alg || req.alg_prime) {
        DerivationDims dd = derivation_algebra(alg, c, req.alg_prime);
        if (req.alg) out.alg = dd.alg;
        if (req.alg_prime) out.alg_prime = dd.alg_prime;
    }
    return out;
}

inline std::string profile_to_string(const InvariantProfile& pr) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() { if (!first) os << "; "; first = false; };
    auto seq = [&](const char* name, const std::vector<int>& v) {
        sep();
        os << name << ": ";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    };
    if (pr.jbs_min) seq("jbs_min", *pr.jbs_min);
    if (pr.jbs_adj) seq("jbs_adj", *pr.jbs_adj);
    if (pr.ds) seq("ds", *pr.ds);
    if (pr.ls) seq("ls", *pr.ls);
    if (pr.nds) seq("nds", *pr.nds);
    if (pr.alg) { sep(); os << "alg: " << *pr.alg; }
    if (pr.alg_prime) { sep(); os << "alg': " << *pr.alg_prime; }
    if (pr.nil_required) { sep(); os << "nil: unavailable"; }
    return os.str();
}

// ---------------------------------------------------------------------------
// Recognition against a representative database.  Profiles of the database
// entries are recomputed on demand; the one tie that would need the missing
// nilradical invariant is reported instead of resolved.
// ---------------------------------------------------------------------------
struct LabeledProfile {
    std::string label;
    InvariantProfile profile;
};

inline std::vector<LabeledProfile> profile_database(char type, int rank, uint32_t p, Kind kind,
                                                    const std::vector<RepresentativeEntry>& db,
                                                    Lattice lattice = Lattice::simply_connected) {
    std::vector<LabeledProfile> out;
    for (const auto& e : db) {
        if (e.type != type || e.rank != rank || e.kind != kind) continue;
        if (!char_condition_applies(e.char_condition, p)) continue;
        out.push_back({e.label, invariant_profile(type, rank, p, kind, e.support, {}, lattice)});
    }
    return out;
}

struct RecognitionResult {
    bool ambiguous = false;
    OrbitLabel label;                     // set when a unique class matched
    std::vector<std::string> candidates;  // both labels of the unresolved tie
    std::string missing_invariant;        // the invariant that would decide it
};

inline RecognitionResult recognize(char type, int rank, uint32_t p, Kind kind,
                                   const InvariantProfile& profile,
                                   const std::vector<LabeledProfile>& database) {
    std::vector<std::string> matched;
    for (const auto& lp : database)
        if (lp.profile == profile) matched.push_back(lp.label);
    std::sort(matched.begin(), matched.end());

    RecognitionResult res;
    if (matched.size() == 1) {
        res.label = {matched.front(), kind, "any"};
        return res;
    }
    if (matched.empty())
        throw std::invalid_argument(
            "profile matches no database entry; the element is outside the shipped "
            "representatives or a profile field is wrong");
    // only documented collision: the pair at p = 3 in the largest type whose
    // tiebreak is the nilradical dimension
    std::vector<std::string> nil_tie = {"D_5(a_1)A_2", "E_6(a_3)A_1"};
    if (type == 'E' && rank == 8 && p == 3 && kind == Kind::nilpotent && matched == nil_tie &&
        profile.nil_required) {
        res.ambiguous = true;
        res.candidates = matched;
        res.missing_invariant = "nil";
        return res;
    }
    std::string names;
    for (const auto& m : matched) names += (names.empty() ? "" : ", ") + m;
    throw std::runtime_error("distinct database entries share one profile: " + names);
}

inline RecognitionResult recognize(char type, int rank, uint32_t p, Kind kind,
                                   const InvariantProfile& profile,
                                   const std::vector<RepresentativeEntry>& db,
                                   Lattice lattice = Lattice::simply_connected) {
    return recognize(type, rank, p, kind, profile, profile_database(type, rank, p, kind, db, lattice));
}

// ---------------------------------------------------------------------------
// Eminent labels per exceptional type.  The nilpotent lists coincide with
// the unipotent ones label-for-label; only the kind tag differs.
// ---------------------------------------------------------------------------
inline std::vector<OrbitLabel> eminent_list(char type, int rank, uint32_t p, Kind kind) {
    detail::check_exceptional(type, rank);
    if (!is_prime(p)) throw std::invalid_argument("eminent_list: p must be prime");
    struct Row { char type; int rank; const char* cond; const char* label; };
    static const Row rows[] = {
        {'G', 2, "any", "G_2"},
        {'G', 2, "p=3", "(Ã_1)_3"},
        {'F', 4, "any", "F_4"},
        {'F', 4, "p=2", "F_4(a_2)"},
        {'F', 4, "p=2", "(Ã_2A_1)_2"},
        {'E', 6, "any", "E_6"},
        {'E', 6, "any", "E_6(a_1)"},
        {'E', 6, "p=2", "E_6(a_3)"},
        {'E', 7, "any", "E_7"},
        {'E', 7, "any", "E_7(a_1)"},
        {'E', 7, "any", "E_7(a_2)"},
        {'E', 7, "p=2", "E_7(a_3)"},
        {'E', 8, "any", "E_8"},
        {'E', 8, "any", "E_8(a_1)"},
        {'E', 8, "any", "E_8(a_2)"},
        {'E', 8, "p=2", "E_8(a_3)"},
        {'E', 8, "p=2", "E_8(a_4)"},
        {'E', 8, "p=2", "E_8(a_5)"},
        {'E', 8, "p=2", "(D_5A_2)_2"},
        {'E', 8, "p=3", "(A_7)_3"},
    };
    std::vector<OrbitLabel> out;
    for (const auto& r : rows)
        if (r.type == type && r.rank == rank && char_condition_applies(r.cond, p))
            out.push_back({r.label, kind, r.cond});
    return out;
}

// ---------------------------------------------------------------------------
// Maximal subsystem overgroups (unipotent) / overalgebras (nilpotent) of the
// distinguished non-eminent classes.
// ---------------------------------------------------------------------------
inline std::vector<std::string> overgroups(char type, int rank, uint32_t p, Kind kind,
                                           const std::string& label) {
    detail::check_exceptional(type, rank);
    if (!is_prime(p)) throw std::invalid_argument("overgroups: p must be prime");
    struct Item { const char* name; const char* cond; };
    struct Row { char type; int rank; const char* row_cond; const char* label;
                 std::vector<Item> items; };
    static const std::vector<Row> unip = {
        {'G', 2, "any", "G_2(a_1)", {{"A_2", "any"}, {"A_1Ã_1", "p!=2"}, {"Ã_2", "p=3"}}},
        {'F', 4, "any", "F_4(a_1)", {{"B_4", "any"}, {"C_4", "p=2"}}},
        {'F', 4, "p!=2", "F_4(a_2)", {{"A_1C_3", "any"}}},
        {'F', 4, "any", "F_4(a_3)",
         {{"B_4", "any"}, {"A_2Ã_2", "p!=3"}, {"A_1C_3", "p!=2"}, {"C_4", "p=2"}}},
        {'F', 4, "p=2", "(C_3(a_1))_2", {{"B_4", "any"}, {"C_4", "any"}}},
        {'E', 6, "p!=2", "E_6(a_3)", {{"A_1A_5", "any"}}},
        {'E', 7, "p!=2", "E_7(a_3)", {{"A_1D_6", "any"}}},
        {'E', 7, "any", "E_7(a_4)", {{"A_1D_6", "any"}, {"A_7", "p=2"}}},
        {'E', 7, "any", "E_7(a_5)", {{"A_1D_6", "p!=2"}, {"A_2A_5", "p!=3"}}},
        {'E', 8, "p!=2", "E_8(a_3)", {{"A_1E_7", "any"}}},
        {'E', 8, "p!=2", "E_8(a_4)", {{"D_8", "any"}}},
        {'E', 8, "p!=2", "E_8(a_5)", {{"D_8", "any"}}},
        {'E', 8, "any", "E_8(a_6)", {{"A_8", "p!=3"}, {"D_8", "p!=2"}}},
        {'E', 8, "any", "E_8(a_7)",
         {{"A_4A_4", "p!=5"}, {"A_2E_6", "p!=3"}, {"A_1E_7", "p!=2"}, {"D_8", "p!=2"}}},
        {'E', 8, "any", "E_8(b_4)", {{"A_1E_7", "any"}, {"D_8", "p=2"}}},
        {'E', 8, "any", "E_8(b_5)", {{"A_2E_6", "p!=3"}, {"A_1E_7", "p!=2"}}},
        {'E', 8, "any", "E_8(b_6)", {{"A_2E_6", "any"}, {"D_8", "p!=2"}, {"A_8", "p=3"}}},
        {'E', 8, "p=2", "(D_7(a_1))_2", {{"A_1E_7", "any"}, {"D_8", "any"}}},
    };
    static const std::vector<Row> nilp = {
        {'G', 2, "any", "G_2(a_1)", {{"A_2", "any"}, {"A_1Ã_1", "p!=2"}}},
        {'F', 4, "any", "F_4(a_1)", {{"B_4", "any"}}},
        {'F', 4, "p!=2", "F_4(a_2)", {{"A_1C_3", "any"}}},
        {'F', 4, "any", "F_4(a_3)", {{"B_4", "any"}, {"A_2Ã_2", "p!=3"}, {"A_1C_3", "p!=2"}}},
        {'F', 4, "p=2", "(C_3(a_1))_2", {{"B_4", "any"}}},
        {'E', 6, "p!=2", "E_6(a_3)", {{"A_1A_5", "any"}}},
        {'E', 7, "p!=2", "E_7(a_3)", {{"A_1D_6", "any"}}},
        {'E', 7, "any", "E_7(a_4)", {{"A_1D_6", "any"}}},
        {'E', 7, "any", "E_7(a_5)", {{"A_1D_6", "p!=2"}, {"A_2A_5", "p!=3"}}},
        {'E', 8, "p!=2", "E_8(a_3)", {{"A_1E_7", "any"}}},
        {'E', 8, "p!=2", "E_8(a_4)", {{"D_8", "any"}}},
        {'E', 8, "p!=2", "E_8(a_5)", {{"D_8", "any"}}},
        {'E', 8, "any", "E_8(a_6)", {{"A_8", "p!=3"}, {"D_8", "p!=2"}}},
        {'E', 8, "any", "E_8(a_7)",
         {{"A_4A_4", "p!=5"}, {"A_2E_6", "p!=3"}, {"A_1E_7", "p!=2"}, {"D_8", "p!=2"}}},
        {'E', 8, "any", "E_8(b_4)", {{"A_1E_7", "any"}}},
        {'E', 8, "any", "E_8(b_5)", {{"A_2E_6", "p!=3"}, {"A_1E_7", "p!=2"}}},
        {'E', 8, "any", "E_8(b_6)", {{"A_2E_6", "any"}, {"D_8", "p!=2"}}},
    };
    const auto& table = (kind == Kind::unipotent) ? unip : nilp;
    for (const auto& r : table) {
        if (r.type != type || r.rank != rank || r.label != label) continue;
        if (!char_condition_applies(r.row_cond, p))
            throw std::invalid_argument("class " + label +
                                        " is not distinguished non-eminent at this characteristic");
        std::vector<std::string> out;
        for (const auto& it : r.items)
            if (char_condition_applies(it.cond, p)) out.push_back(it.name);
        return out;
    }
    throw std::invalid_argument("no overgroup row for label " + label);
}

// ---------------------------------------------------------------------------
// Levi-regular representatives: the label names a subdiagram up to tilde
// marks for all-short components; the first matching node subset in
// lexicographic order fixes the support.
// ---------------------------------------------------------------------------
namespace detail {

// components of a subsystem label: multiplicity, tilde, letter, rank
inline std::vector<std::tuple<char, int, bool>> parse_subsystem_label(const std::string& label) {
    std::vector<std::tuple<char, int, bool>> out;
    size_t i = 0;
    auto read_int = [&]() {
        size_t s = i;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
        if (s == i) throw std::invalid_argument("malformed subsystem label: " + label);
        return std::stoi(label.substr(s, i - s));
    };
    while (i < label.size()) {
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(label[i]))) mult = read_int();
        bool tilde = false;
        char letter;
        if (label[i] == '~') {
            tilde = true;
            ++i;
            letter = i < label.size() ? label[i] : '\0';
            ++i;
        } else if (i + 1 < label.size() && static_cast<unsigned char>(label[i]) == 0xC3 &&
                   static_cast<unsigned char>(label[i + 1]) == 0x83) {
            tilde = true;
            letter = 'A';  // the two-byte sequence is itself the tilde-marked A
            i += 2;
        } else {
            letter = label[i];
            ++i;
        }
        if (letter < 'A' || letter > 'G')
            throw std::invalid_argument("malformed subsystem label: " + label);
        if (i >= label.size() || label[i] != '_')
            throw std::invalid_argument("malformed subsystem label: " + label);
        ++i;
        int r = read_int();
        int exp = 1;
        if (i < label.size() && label[i] == '^') {
            ++i;
            exp = read_int();
        }
        for (int k = 0; k < mult * exp; ++k) out.emplace_back(letter, r, tilde);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline RepresentativeEntry levi_regular_representative(char type, int rank,
                                                       const std::string& levi_label) {
    RootSystem rs(type, rank);
    auto target = detail::parse_subsystem_label(levi_label);
    int k = 0;
    for (const auto& t : target) k += std::get<1>(t);
    if (k < 1 || k > rank)
        throw std::invalid_argument("label " + levi_label + " is not realizable as a subdiagram");

    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    bool two_len = rs.two_lengths();
    while (true) {
        std::vector<RootVec> roots;
        for (int c : comb) roots.push_back(rs.simple_root(c + 1));
        Subsystem sub = classify_subsystem(rs, roots);
        std::vector<std::tuple<char, int, bool>> got;
        for (const auto& comp : sub.components)
            got.emplace_back(comp.type, comp.rank, two_len && comp.short_roots);
        std::sort(got.begin(), got.end());
        if (got == target) {
            RepresentativeEntry e;
            e.type = type;
            e.rank = rank;
            e.label = levi_label;
            e.source = RepSource::levi_regular;
            e.support = std::move(roots);
            return e;
        }
        int i = k - 1;
        while (i >= 0 && comb[i] == rank - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    throw std::invalid_argument("label " + levi_label + " is not realizable as a subdiagram");
}

}  // namespace chevrep
