// rootsys.hpp - root systems of simple type in Bourbaki numbering: positive
// roots by closure, canonical ordering, epsilon views for B/C/D, extended
// diagram subsystems, and the static maximal generalized-subsystem rows.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "chevrep/intmat.hpp"

namespace chevrep {

using RootVec = std::vector<int>;  // coefficients over the simple roots

inline RootVec root_neg(const RootVec& a) {
    RootVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RootVec root_add(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline int root_height(const RootVec& a) {
    int h = 0;
    for (int c : a) h += c;
    return h;
}

class RootSystem {
public:
    RootSystem(char type, int rank) : type_(type), rank_(rank) {
        validate();
        build_cartan();
        build_positive_roots();
        index_roots();
    }

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    // cartan()[i][j] = <alpha_i, alpha_j^vee>, 0-based
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    int num_positive() const { return static_cast<int>(positive_.size()); }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    const RootVec& positive_root(int i) const { return positive_[i]; }
    RootVec simple_root(int i) const {  // 1-based, as everywhere in the interface
        CHEVREP_CHECK(1 <= i && i <= rank_, "simple root index out of range");
        RootVec r(rank_, 0);
        r[i - 1] = 1;
        return r;
    }

    bool is_root(const RootVec& a) const { return pos_index_.count(a) || pos_index_.count(root_neg(a)); }
    bool is_positive_root(const RootVec& a) const { return pos_index_.count(a) != 0; }

    // Index into the canonical positive ordering (height, then larger first
    // coefficient wins); throws if not a positive root.
    int positive_index(const RootVec& a) const {
        auto it = pos_index_.find(a);
        CHEVREP_CHECK(it != pos_index_.end(), "not a positive root");
        return it->second;
    }

    const RootVec& highest_root() const { return positive_.back(); }

    // Symmetrized invariant form; short roots have squared length 2 in
    // simply-laced types, 1 in B/F (shorts), 2 in C/G (shorts).
    Rat inner(const RootVec& a, const RootVec& b) const {
        Rat s(0);
        for (int i = 0; i < rank_; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < rank_; ++j) {
                if (!b[j]) continue;
                s = s + Rat(static_cast<int64_t>(a[i]) * b[j] * cartan_[i][j] * len2_[j], 2);
            }
        }
        return s;
    }

    Rat len2(const RootVec& a) const { return inner(a, a); }

    // <a, b^vee> = 2(a,b)/(b,b); integral whenever a, b are roots.
    int pairing(const RootVec& a, const RootVec& b) const {
        Rat r = (inner(a, b) * Rat(2)) / inner(b, b);
        return static_cast<int>(r.as_int());
    }

    bool is_long(const RootVec& a) const { return len2(a) == max_len2_; }
    bool is_short(const RootVec& a) const { return len2(a) != max_len2_; }
    bool two_lengths() const { return min_len2_ != max_len2_; }

    // Coefficients in the orthonormal-ish epsilon coordinates of the natural
    // module (A: n+1 entries, B/C/D: n entries).  Only these types.
    std::vector<int> to_epsilon(const RootVec& a) const {
        std::vector<int> e;
        if (type_ == 'A') {
            e.assign(rank_ + 1, 0);
            for (int i = 0; i < rank_; ++i) {
                e[i] += a[i];
                e[i + 1] -= a[i];
            }
        } else if (type_ == 'B' || type_ == 'C' || type_ == 'D') {
            e.assign(rank_, 0);
            for (int i = 0; i + 1 < rank_; ++i) {
                e[i] += a[i];
                e[i + 1] -= a[i];
            }
            int n = rank_;
            if (type_ == 'B') e[n - 1] += a[n - 1];
            if (type_ == 'C') e[n - 1] += 2 * a[n - 1];
            if (type_ == 'D') {
                e[n - 2] += a[n - 1];
                e[n - 1] += a[n - 1];
            }
        } else {
            throw std::invalid_argument("to_epsilon: only A/B/C/D");
        }
        return e;
    }

    std::string root_string(const RootVec& a) const {
        std::string s;
        bool wide = false;
        for (int c : a)
            if (c < 0 || c > 9) wide = true;
        for (int i = 0; i < rank_; ++i) {
            if (wide && i) s += ',';
            s += std::to_string(a[i]);
        }
        return s;
    }

private:
    void validate() const {
        bool ok = false;
        switch (type_) {
            case 'A': ok = rank_ >= 1; break;
            case 'B': ok = rank_ >= 2; break;
            case 'C': ok = rank_ >= 2; break;
            case 'D': ok = rank_ >= 4; break;
            case 'E': ok = rank_ >= 6 && rank_ <= 8; break;
            case 'F': ok = rank_ == 4; break;
            case 'G': ok = rank_ == 2; break;
            default: ok = false;
        }
        if (!ok) throw std::invalid_argument("invalid simple type/rank");
    }

    void build_cartan() {
        int n = rank_;
        cartan_.assign(n, std::vector<int>(n, 0));
        len2_.assign(n, 2);
        for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
        auto link = [&](int i, int j) {  // 1-based simple bond
            cartan_[i - 1][j - 1] = -1;
            cartan_[j - 1][i - 1] = -1;
        };
        switch (type_) {
            case 'A':
                for (int i = 1; i < n; ++i) link(i, i + 1);
                break;
            case 'B':
                for (int i = 1; i < n; ++i) link(i, i + 1);
                cartan_[n - 2][n - 1] = -2;  // alpha_n short
                len2_[n - 1] = 1;
                break;
            case 'C':
                for (int i = 1; i < n; ++i) link(i, i + 1);
                cartan_[n - 1][n - 2] = -2;  // alpha_n long
                len2_[n - 1] = 4;
                break;
            case 'D':
                for (int i = 1; i < n - 1; ++i) link(i, i + 1);
                link(n - 2, n);
                cartan_[n - 1][n - 2] = 0;
                cartan_[n - 2][n - 1] = 0;
                break;
            case 'E':
                link(1, 3);
                link(3, 4);
                link(2, 4);
                for (int i = 4; i < n; ++i) link(i, i + 1);
                break;
            case 'F':
                link(1, 2);
                link(2, 3);
                link(3, 4);
                cartan_[1][2] = -2;  // alpha_3, alpha_4 short
                len2_[2] = 1;
                len2_[3] = 1;
                break;
            case 'G':
                link(1, 2);
                cartan_[1][0] = -3;  // alpha_1 short, alpha_2 long
                len2_[1] = 6;
                break;
        }
        // consistency of the symmetrization
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHEVREP_CHECK(cartan_[i][j] * len2_[j] == cartan_[j][i] * len2_[i],
                              "cartan symmetrization broken");
        min_len2_ = Rat(*std::min_element(len2_.begin(), len2_.end()));
        max_len2_ = Rat(*std::max_element(len2_.begin(), len2_.end()));
    }

    // <a, alpha_i^vee> for 1-based i, from the Cartan matrix alone.
    int simple_pairing(const RootVec& a, int i) const {
        int s = 0;
        for (int j = 0; j < rank_; ++j) s += a[j] * cartan_[j][i - 1];
        return s;
    }

    void build_positive_roots() {
        std::map<RootVec, int> seen;  // root -> height
        std::vector<std::vector<RootVec>> by_height(1);
        for (int i = 1; i <= rank_; ++i) {
            by_height[0].push_back(simple_root(i));
            seen[simple_root(i)] = 1;
        }
        for (int h = 1; !by_height[h - 1].empty(); ++h) {
            by_height.push_back({});
            for (const RootVec& g : by_height[h - 1]) {
                for (int i = 1; i <= rank_; ++i) {
                    RootVec cand = root_add(g, simple_root(i));
                    if (seen.count(cand)) continue;
                    // root string: g + alpha_i is a root iff p - <g, alpha_i^vee> > 0,
                    // where p = max { k : g - k alpha_i is a root }.
                    int p = 0;
                    RootVec down = g;
                    while (true) {
                        down = root_add(down, root_neg(simple_root(i)));
                        if (root_height(down) <= 0 || !seen.count(down)) break;
                        ++p;
                    }
                    if (p - simple_pairing(g, i) > 0) {
                        seen[cand] = h + 1;
                        by_height[h].push_back(cand);
                    }
                }
            }
        }
        positive_.clear();
        for (auto& level : by_height) {
            std::sort(level.begin(), level.end(), [](const RootVec& a, const RootVec& b) {
                return a > b;  // larger leading coefficient first: alpha_1 before alpha_2
            });
            for (auto& r : level) positive_.push_back(r);
        }
    }

    void index_roots() {
        for (size_t i = 0; i < positive_.size(); ++i)
            pos_index_[positive_[i]] = static_cast<int>(i);
    }

    char type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> len2_;  // (alpha_i, alpha_i) in the chosen normalization
    Rat min_len2_, max_len2_;
    std::vector<RootVec> positive_;
    std::map<RootVec, int> pos_index_;
};

inline RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

inline RootVec root_from_coefficients(const RootSystem& rs, const std::vector<int>& coeffs) {
    if (static_cast<int>(coeffs.size()) != rs.rank())
        throw std::invalid_argument("coefficient count must equal the rank");
    RootVec r(coeffs.begin(), coeffs.end());
    if (!rs.is_root(r)) throw std::invalid_argument("coefficient vector is not a root");
    return r;
}

// Digit-string form, e.g. "1232" in F4; comma-separated accepted for wide
// coefficients or rank >= 10.
inline RootVec root_from_bourbaki_string(const RootSystem& rs, const std::string& digits) {
    std::vector<int> coeffs;
    if (digits.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos <= digits.size()) {
            size_t comma = digits.find(',', pos);
            if (comma == std::string::npos) comma = digits.size();
            coeffs.push_back(std::stoi(digits.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } else {
        for (char c : digits) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in root string");
            coeffs.push_back(c - '0');
        }
    }
    return root_from_coefficients(rs, coeffs);
}

// beta_l of D_n: alpha_n + sum_{i=2l-n-1}^{n-2} alpha_i, defined for
// (n+1)/2 < l <= n.
inline RootVec beta_l_root(int n, int l) {
    if (n < 4) throw std::invalid_argument("beta_l_root needs type D, rank >= 4");
    if (!(2 * l > n + 1 && l <= n)) throw std::invalid_argument("beta_l_root: l out of range");
    RootVec r(n, 0);
    r[n - 1] = 1;
    for (int i = 2 * l - n - 1; i <= n - 2; ++i) r[i - 1] += 1;
    return r;
}

// ---------------------------------------------------------------------------
// Closed subsystems via one extended-diagram node deletion.
// ---------------------------------------------------------------------------
struct SubsystemComponent {
    char type;
    int rank;
    bool short_roots;  // all simple roots short in the ambient system (tilde label)
    std::vector<RootVec> simple_roots;  // as roots of the ambient system
};

struct Subsystem {
    std::vector<SubsystemComponent> components;
    int deleted_node;  // 1-based simple root removed from the extended diagram
    std::string label;
};

namespace detail {

// Identify the type of one connected component from its pairing matrix and the
// squared lengths of its roots in the ambient system.
inline SubsystemComponent identify_component(const RootSystem& rs,
                                             const std::vector<RootVec>& roots) {
    int n = static_cast<int>(roots.size());
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = rs.pairing(roots[i], roots[j]);

    SubsystemComponent comp;
    comp.rank = n;
    comp.short_roots = true;
    for (const auto& r : roots)
        if (rs.is_long(r)) comp.short_roots = false;

    std::vector<int> degree(n, 0);
    int max_bond = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && a[i][j] != 0) {
                ++degree[i];
                max_bond = std::max(max_bond, a[i][j] * a[j][i]);
            }

    if (n == 1) {
        comp.type = 'A';
    } else if (max_bond == 3) {
        comp.type = 'G';
        CHEVREP_CHECK(n == 2, "triple bond outside G2");
    } else if (max_bond == 2) {
        // one double bond: direction decides B vs C; F4 when it sits mid-chain
        int li = -1, lj = -1;
        for (int i = 0; i < n && li < 0; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && a[i][j] * a[j][i] == 2) {
                    li = i;
                    lj = j;
                    break;
                }
        bool interior = degree[li] == 2 && degree[lj] == 2;
        if (interior && n == 4) {
            comp.type = 'F';
        } else {
            // count simple roots shorter than the component's longest
            int shorts = 0;
            Rat lmax = rs.len2(roots[0]);
            for (int i = 1; i < n; ++i) {
                Rat l = rs.len2(roots[i]);
                if ((l - lmax).num > 0) lmax = l;
            }
            for (int i = 0; i < n; ++i)
                if (rs.len2(roots[i]) != lmax) ++shorts;
            comp.type = shorts == 1 ? 'B' : 'C';
            CHEVREP_CHECK(shorts == 1 || shorts == n - 1, "unrecognized double-bond component");
        }
    } else {
        int deg3 = -1;
        for (int i = 0; i < n; ++i) {
            CHEVREP_CHECK(degree[i] <= 3, "degree > 3 in simply-laced component");
            if (degree[i] == 3) {
                CHEVREP_CHECK(deg3 < 0, "two branch nodes in one component");
                deg3 = i;
            }
        }
        if (deg3 < 0) {
            comp.type = 'A';
        } else {
            // arm lengths from the branch node
            std::vector<int> arms;
            std::vector<char> used(n, 0);
            used[deg3] = 1;
            for (int j = 0; j < n; ++j) {
                if (j == deg3 || a[deg3][j] == 0) continue;
                int len = 0, prev = deg3, cur = j;
                while (true) {
                    ++len;
                    used[cur] = 1;
                    int nxt = -1;
                    for (int t = 0; t < n; ++t)
                        if (t != prev && t != cur && a[cur][t] != 0 && !used[t]) nxt = t;
                    if (nxt < 0) break;
                    prev = cur;
                    cur = nxt;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            CHEVREP_CHECK(arms.size() == 3, "branch node without three arms");
            if (arms[0] == 1 && arms[1] == 1)
                comp.type = 'D';
            else {
                CHEVREP_CHECK(arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4,
                              "unrecognized branched component");
                comp.type = 'E';
            }
        }
    }
    comp.simple_roots = roots;
    return comp;
}

inline std::string component_label(const SubsystemComponent& c, bool ambient_two_lengths) {
    std::string s;
    if (ambient_two_lengths && c.short_roots) s += "~";
    s += c.type;
    s += "_" + std::to_string(c.rank);
    return s;
}

}  // namespace detail

// Decompose a set of mutually compatible roots into connected components and
// identify each; the component order is rank-ascending for stable labels.
inline Subsystem classify_subsystem(const RootSystem& rs, const std::vector<RootVec>& roots,
                                    int deleted_node = 0) {
    int n = static_cast<int>(roots.size());
    std::vector<int> comp_id(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp_id[s] >= 0) continue;
        std::vector<int> stack = {s};
        comp_id[s] = ncomp;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (comp_id[j] < 0 && rs.pairing(roots[i], roots[j]) != 0) {
                    comp_id[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    Subsystem sub;
    sub.deleted_node = deleted_node;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<RootVec> comp_roots;
        for (int i = 0; i < n; ++i)
            if (comp_id[i] == c) comp_roots.push_back(roots[i]);
        sub.components.push_back(detail::identify_component(rs, comp_roots));
    }
    std::sort(sub.components.begin(), sub.components.end(),
              [](const SubsystemComponent& x, const SubsystemComponent& y) {
                  if (x.rank != y.rank) return x.rank < y.rank;
                  if (x.short_roots != y.short_roots) return !x.short_roots;
                  return x.type < y.type;
              });
    for (const auto& c : sub.components)
        sub.label += detail::component_label(c, rs.two_lengths());
    return sub;
}

// Proper maximal-rank closed subsystems from single deletions in the extended
// diagram (nodes whose highest-root mark exceeds 1), deduplicated by label.
inline std::vector<Subsystem> closed_subsystems(const RootSystem& rs) {
    std::vector<Subsystem> out;
    const RootVec& theta = rs.highest_root();
    RootVec lowest = root_neg(theta);
    std::map<std::string, int> seen;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (theta[i - 1] <= 1) continue;  // mark 1: deletion reproduces the whole system
        std::vector<RootVec> roots = {lowest};
        for (int j = 1; j <= rs.rank(); ++j)
            if (j != i) roots.push_back(rs.simple_root(j));
        Subsystem sub = classify_subsystem(rs, roots, i);
        if (seen.count(sub.label)) continue;
        seen[sub.label] = 1;
        out.push_back(std::move(sub));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Maximal generalized subsystem rows for classical types (static data).
// ---------------------------------------------------------------------------
struct GenSubsysRow {
    std::vector<std::pair<char, int>> components;  // (type, rank), rank >= 1
    std::string char_condition;                    // "any", "p=2", "p!=2"
};

inline std::vector<GenSubsysRow> maximal_generalized_subsystems(char type, int rank, uint32_t p) {
    if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
        throw std::invalid_argument("maximal_generalized_subsystems: classical types only");
    RootSystem probe(type, rank);  // validates (type, rank)
    (void)probe;
    std::vector<GenSubsysRow> rows;
    auto add = [&](std::vector<std::pair<char, int>> comps, const char* cond) {
        std::sort(comps.begin(), comps.end(),
                  [](auto& a, auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
        for (const auto& r : rows)
            if (r.components == comps) return;
        rows.push_back({std::move(comps), cond});
    };
    int n = rank;
    switch (type) {
        case 'A':
            break;
        case 'B':
            if (p != 2)
                for (int m = 1; m < n; ++m) add({{'B', m}, {'D', n - m}}, "p!=2");
            if (p == 2)
                for (int m = 1; 2 * m <= n; ++m) add({{'B', m}, {'B', n - m}}, "p=2");
            add({{'D', n}}, "any");
            break;
        case 'C':
            for (int m = 1; 2 * m <= n; ++m) add({{'C', m}, {'C', n - m}}, "any");
            if (p == 2) add({{'D', n}}, "p=2");
            break;
        case 'D':
            for (int m = 2; 2 * m <= n; ++m) add({{'D', m}, {'D', n - m}}, "any");
            add({{'B', n - 1}}, "any");
            if (p != 2)
                for (int m = 1; 2 * m <= n; ++m) add({{'B', m}, {'B', n - m - 1}}, "p!=2");
            break;
    }
    return rows;
}

}  // namespace chevrep
