// Command-line surface: construct class representatives, classify elements,
// print invariant profiles, list eminent classes, list subsystem overgroups,
// and verify the frozen tables.  Exit codes: 0 success, 1 domain error on the
// input, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chevrep/goldentables.hpp"
#include "chevrep/orbits.hpp"
#include "chevrep/recognition.hpp"
#include "chevrep/repdb.hpp"

using namespace chevrep;

namespace {

struct GroupId {
    char type = 0;
    int rank = 0;
    bool exceptional = false;
};

// --type accepts a bare letter plus --rank, or a fused token like E8
GroupId resolve_group(const std::string& type_token, int rank_flag) {
    if (type_token.empty()) throw std::invalid_argument("missing --type");
    char letter = type_token[0];
    if (letter < 'A' || letter > 'G')
        throw std::invalid_argument("unknown group type: " + type_token);
    int fused = 0;
    for (size_t i = 1; i < type_token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(type_token[i])))
            throw std::invalid_argument("unknown group type: " + type_token);
        fused = fused * 10 + (type_token[i] - '0');
    }
    int rank = fused ? fused : rank_flag;
    if (fused && rank_flag && fused != rank_flag)
        throw std::invalid_argument("--type and --rank disagree on the rank");
    if (!rank) throw std::invalid_argument("missing --rank");
    GroupId g;
    g.type = letter;
    g.rank = rank;
    g.exceptional = (letter == 'E' || letter == 'F' || letter == 'G');
    if (g.exceptional) detail::check_exceptional(letter, rank);
    return g;
}

Kind parse_kind(const std::string& s) {
    if (s == "nilpotent") return Kind::nilpotent;
    if (s == "unipotent") return Kind::unipotent;
    throw std::invalid_argument("--kind must be nilpotent or unipotent");
}

Lattice parse_lattice(const std::string& s) {
    if (s == "sc") return Lattice::simply_connected;
    if (s == "ad") return Lattice::adjoint;
    throw std::invalid_argument("--lattice must be sc or ad");
}

uint32_t require_prime(int p) {
    if (p <= 0 || !is_prime(static_cast<uint32_t>(p)))
        throw std::invalid_argument("--p must be a prime");
    return static_cast<uint32_t>(p);
}

// "E8" and "E_8" both name the regular class label in the database
std::string normalize_label(const std::string& label) {
    if (label.find('_') != std::string::npos) return label;
    size_t i = 0;
    while (i < label.size() && !std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == 0 || i == label.size()) return label;
    for (size_t j = i; j < label.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(label[j]))) return label;
    return label.substr(0, i) + "_" + label.substr(i);
}

std::string digits_of(const RootVec& r) {
    std::string s;
    for (int c : r) s += std::to_string(c);
    return s;
}

std::string support_string(const std::vector<RootVec>& support) {
    std::string s;
    for (size_t i = 0; i < support.size(); ++i) {
        if (i) s += ',';
        s += digits_of(support[i]);
    }
    return s;
}

std::vector<RootVec> parse_support(const RootSystem& rs, const std::string& text) {
    std::vector<RootVec> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(root_from_bourbaki_string(rs, tok));
    return out;
}

GfpMat read_matrix_file(const std::string& path, uint32_t p, int dim) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    GfpMat m(p, dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            long long v;
            if (!(in >> v))
                throw std::invalid_argument("matrix file needs " + std::to_string(dim) + "x" +
                                            std::to_string(dim) + " integer entries");
            long long r = v % static_cast<long long>(p);
            if (r < 0) r += p;
            m.set(i, j, static_cast<uint32_t>(r));
        }
    return m;
}

std::string matrix_rows(const GfpMat& m, const char* row_sep) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i) {
        if (i) s += row_sep;
        for (int j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += std::to_string(m.at(i, j));
        }
    }
    return s;
}

const std::vector<RepresentativeEntry>& shipped_db() {
    static const std::vector<RepresentativeEntry> db = load_representative_db(CHEVREP_REPDB_PATH);
    return db;
}

const RepresentativeEntry* find_entry(char type, int rank, const std::string& label, Kind kind) {
    for (const auto& e : shipped_db())
        if (e.type == type && e.rank == rank && e.label == label && e.kind == kind) return &e;
    return nullptr;
}

// shared flag block; each subcommand picks the pieces it needs
struct CommonOpts {
    std::string type;
    int rank = 0;
    int p = 0;
    std::string kind = "nilpotent";
    std::string lattice = "sc";
    std::string format = "text";
    std::string label;
    std::string support;
    std::string matrix_file;
    std::string eminent_family;
    int l = 0;
    bool has_l = false;
};

void add_group_flags(CLI::App* cmd, CommonOpts& o, bool with_p) {
    cmd->add_option("--type", o.type, "group type letter, optionally fused with the rank (C, E8)")
        ->required();
    cmd->add_option("--rank", o.rank, "rank when --type is a bare letter");
    if (with_p) cmd->add_option("--p", o.p, "field characteristic (prime)");
    cmd->add_option("--format", o.format, "output format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
}

void check_format(const CommonOpts& o) {
    if (o.format != "text" && o.format != "tsv")
        throw std::invalid_argument("--format must be text or tsv");
}

bool tsv(const CommonOpts& o) { return o.format == "tsv"; }

// ---------------------------------------------------------------------------
// represent
// ---------------------------------------------------------------------------
int run_represent(const CommonOpts& o) {
    check_format(o);
    GroupId g = resolve_group(o.type, o.rank);
    Kind kind = parse_kind(o.kind);
    if (g.exceptional) {
        std::string label = normalize_label(o.label);
        if (label.empty()) throw std::invalid_argument("exceptional represent needs --label");
        const RepresentativeEntry* e = find_entry(g.type, g.rank, label, kind);
        if (!e)
            throw std::invalid_argument("no representative with label " + label +
                                        " in the database for this group");
        if (tsv(o)) {
            std::cout << "type\tlabel\tkind\tsupport\n"
                      << g.type << g.rank << '\t' << e->label << '\t' << o.kind << '\t'
                      << support_string(e->support) << '\n';
        } else {
            std::cout << "label: " << e->label << '\n'
                      << "kind: " << o.kind << '\n'
                      << "support: " << support_string(e->support) << '\n';
        }
        return 0;
    }
    uint32_t p = require_prime(o.p);
    if (!o.eminent_family.empty() && o.eminent_family != "Wl")
        throw std::invalid_argument("unknown eminent family: " + o.eminent_family);
    if (!o.eminent_family.empty() && !o.has_l)
        throw std::invalid_argument("family Wl needs --l");
    std::optional<int> l;
    if (o.has_l) l = o.l;
    std::vector<RootVec> support = eminent_support(g.type, g.rank, p, kind, l);
    auto re = classical_realization(g.type, g.rank, p);
    GfpMat x = eminent_representative(re, kind, l);
    if (tsv(o)) {
        std::cout << "type\trank\tp\tkind\tfamily\tsupport\tmatrix\n"
                  << g.type << '\t' << g.rank << '\t' << p << '\t' << o.kind << '\t'
                  << (l ? "W_" + std::to_string(*l) : std::string("regular")) << '\t'
                  << support_string(support) << '\t' << matrix_rows(x, ";") << '\n';
    } else {
        std::cout << "support: " << support_string(support) << '\n'
                  << "matrix:\n"
                  << matrix_rows(x, "\n") << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------
std::string so_note(SoSplitting s) {
    switch (s) {
        case SoSplitting::not_in_so: return "does not meet SO(V)";
        case SoSplitting::one_class: return "one SO(V) class";
        case SoSplitting::splits_into_two: return "splits into two SO(V) classes";
    }
    return "";
}

int run_classify(const CommonOpts& o) {
    check_format(o);
    GroupId g = resolve_group(o.type, o.rank);
    Kind kind = parse_kind(o.kind);
    uint32_t p = require_prime(o.p);

    if (g.exceptional) {
        if (!o.matrix_file.empty())
            throw std::invalid_argument(
                "exceptional classify takes --support; matrix input is for classical types");
        RootSystem rs(g.type, g.rank);
        std::vector<RootVec> support = parse_support(rs, o.support);
        Lattice lat = parse_lattice(o.lattice);
        InvariantProfile pr = invariant_profile(g.type, g.rank, p, kind, support, {}, lat);
        RecognitionResult res = recognize(g.type, g.rank, p, kind, pr, shipped_db(), lat);
        std::string profile = profile_to_string(pr);
        if (tsv(o)) {
            std::cout << "label\tambiguous\tmissing\tprofile\n";
            if (res.ambiguous) {
                std::string cands;
                for (const auto& c : res.candidates)
                    cands += (cands.empty() ? "" : ", ") + c;
                std::cout << cands << "\tyes\t" << res.missing_invariant << '\t' << profile
                          << '\n';
            } else {
                std::cout << res.label.label << "\tno\t\t" << profile << '\n';
            }
        } else if (res.ambiguous) {
            std::string cands;
            for (const auto& c : res.candidates) cands += (cands.empty() ? "" : ", ") + c;
            std::cout << "ambiguous: " << cands << '\n'
                      << "missing invariant: " << res.missing_invariant << '\n'
                      << "profile: " << profile << '\n';
        } else {
            std::cout << "label: " << res.label.label << '\n' << "profile: " << profile << '\n';
        }
        return 0;
    }

    if (g.type == 'A')
        throw std::invalid_argument("classify needs a form; types B, C, D only");
    auto re = classical_realization(g.type, g.rank, p);
    const FormedSpace& space = *re.space;
    GfpMat x(p, 0, 0);
    if (!o.matrix_file.empty()) {
        if (!o.support.empty())
            throw std::invalid_argument("give either --support or --matrix-file, not both");
        x = read_matrix_file(o.matrix_file, p, space.dim());
    } else {
        std::vector<RootVec> support = parse_support(re.algebra.rs(), o.support);
        if (kind == Kind::nilpotent) {
            x = re.natural.action(re.algebra.element_from_roots(support));
        } else {
            std::vector<int> ids;
            for (const auto& r : support) ids.push_back(re.algebra.z().id_of(r));
            x = re.natural.unipotent_product(ids);
        }
    }
    OrthoDecomposition d = decompose(x, space, kind);
    bool eminent = is_eminent_classical(d, g.type, g.rank, p, kind);
    bool distinguished = d.count(SummandTag::W) == 0;
    std::string so;
    if (space.flavor() == FormFlavor::orthogonal) so = so_note(so_class_splitting(d, space, kind));
    if (tsv(o)) {
        std::cout << "decomposition\teminent\tdistinguished\tso\n"
                  << d.str() << '\t' << (eminent ? "yes" : "no") << '\t'
                  << (distinguished ? "yes" : "no") << '\t' << so << '\n';
    } else {
        std::cout << d.str() << "; eminent: " << (eminent ? "yes" : "no")
                  << "; distinguished: " << (distinguished ? "yes" : "no");
        if (!so.empty()) std::cout << "; so: " << so;
        std::cout << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------
int run_invariants(const CommonOpts& o) {
    check_format(o);
    GroupId g = resolve_group(o.type, o.rank);
    if (!g.exceptional)
        throw std::invalid_argument(
            "invariant profiles are defined for the exceptional types; use classify for "
            "classical groups");
    Kind kind = parse_kind(o.kind);
    uint32_t p = require_prime(o.p);
    RootSystem rs(g.type, g.rank);
    std::vector<RootVec> support = parse_support(rs, o.support);
    InvariantProfile pr =
        invariant_profile(g.type, g.rank, p, kind, support, {}, parse_lattice(o.lattice));
    if (tsv(o)) {
        auto seq = [](const std::optional<std::vector<int>>& v) {
            std::string s;
            if (v)
                for (size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
            return s;
        };
        std::cout << "jbs_min\tjbs_adj\tds\tls\tnds\talg\talg_prime\tnil\n"
                  << seq(pr.jbs_min) << '\t' << seq(pr.jbs_adj) << '\t' << seq(pr.ds) << '\t'
                  << seq(pr.ls) << '\t' << seq(pr.nds) << '\t'
                  << (pr.alg ? std::to_string(*pr.alg) : "") << '\t'
                  << (pr.alg_prime ? std::to_string(*pr.alg_prime) : "") << '\t'
                  << (pr.nil_required ? "unavailable" : "") << '\n';
    } else {
        std::cout << profile_to_string(pr) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// eminent
// ---------------------------------------------------------------------------
int run_eminent(const CommonOpts& o) {
    check_format(o);
    GroupId g = resolve_group(o.type, o.rank);
    Kind kind = parse_kind(o.kind);
    uint32_t p = require_prime(o.p);
    if (g.exceptional) {
        auto list = eminent_list(g.type, g.rank, p, kind);
        if (tsv(o)) {
            std::cout << "label\tcondition\n";
            for (const auto& l : list) std::cout << l.label << '\t' << l.char_condition << '\n';
        } else {
            for (const auto& l : list) {
                std::cout << l.label;
                if (l.char_condition != "any") std::cout << " [" << l.char_condition << "]";
                std::cout << '\n';
            }
        }
        return 0;
    }
    auto list = eminent_decompositions(g.type, g.rank, p, kind);
    if (tsv(o)) std::cout << "decomposition\n";
    for (const auto& d : list) std::cout << d.str() << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// overgroups
// ---------------------------------------------------------------------------
int run_overgroups(const CommonOpts& o) {
    check_format(o);
    GroupId g = resolve_group(o.type, o.rank);
    if (!g.exceptional)
        throw std::invalid_argument("overgroup tables cover the exceptional types only");
    Kind kind = parse_kind(o.kind);
    uint32_t p = require_prime(o.p);
    if (o.label.empty()) throw std::invalid_argument("overgroups needs --label");
    auto list = overgroups(g.type, g.rank, p, kind, o.label);
    if (tsv(o)) std::cout << "overgroup\n";
    for (const auto& name : list) std::cout << name << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// verify-tables
// ---------------------------------------------------------------------------
struct VerifyReport {
    int checks = 0;
    int failures = 0;

    void record(bool ok, const std::string& what, const std::string& detail = {}) {
        ++checks;
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
    }
};

void verify_classical(VerifyReport& rep) {
    for (const auto& table : golden_class_tables()) {
        struct Cell {
            const char* expected;
            Kind kind;
            uint32_t p;
        };
        for (const auto& row : table.rows) {
            std::vector<Cell> cells;
            for (uint32_t p : {3u, 5u}) {
                if (row.nil_odd) cells.push_back({row.nil_odd, Kind::nilpotent, p});
                if (row.uni_odd) cells.push_back({row.uni_odd, Kind::unipotent, p});
            }
            if (row.nil_two) cells.push_back({row.nil_two, Kind::nilpotent, 2});
            if (row.uni_two) cells.push_back({row.uni_two, Kind::unipotent, 2});
            for (const Cell& cell : cells) {
                auto re = classical_realization(table.type, table.rank, cell.p);
                std::vector<RootVec> support;
                for (const char* s : row.roots)
                    support.push_back(root_from_bourbaki_string(re.algebra.rs(), s));
                GfpMat x(cell.p, 0, 0);
                if (cell.kind == Kind::nilpotent) {
                    x = re.natural.action(re.algebra.element_from_roots(support));
                } else {
                    std::vector<int> ids;
                    for (const auto& r : support) ids.push_back(re.algebra.z().id_of(r));
                    x = re.natural.unipotent_product(ids);
                }
                OrthoDecomposition got = decompose(x, *re.space, cell.kind);
                OrthoDecomposition want = OrthoDecomposition::parse(cell.expected);
                std::ostringstream what;
                what << table.name << " p=" << cell.p
                     << (cell.kind == Kind::nilpotent ? " nilpotent " : " unipotent ")
                     << cell.expected;
                rep.record(got == want, what.str(), "got " + got.str());
            }
        }
    }
}

void verify_exceptional(VerifyReport& rep) {
    const std::vector<RepresentativeEntry>* db = nullptr;
    try {
        db = &shipped_db();
        rep.record(true, "representative database checksum");
    } catch (const std::exception& e) {
        rep.record(false, "representative database checksum", e.what());
        return;
    }
    for (const auto& row : golden_profile_rows()) {
        std::ostringstream what;
        what << row.type << row.rank << " p=" << row.p
             << (row.lattice == Lattice::adjoint ? " ad " : " sc ") << row.label;
        const RepresentativeEntry* e = nullptr;
        for (const auto& cand : *db)
            if (cand.type == row.type && cand.rank == row.rank && cand.label == row.label &&
                cand.kind == Kind::nilpotent)
                e = &cand;
        if (!e) {
            rep.record(false, what.str(), "label missing from database");
            continue;
        }
        InvariantProfile pr = invariant_profile(row.type, row.rank, row.p, Kind::nilpotent,
                                                e->support, {}, row.lattice);
        bool ok = true;
        std::string detail;
        auto miss = [&](const std::string& d) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + d;
        };
        if (!row.ds.empty()) {
            if (!pr.ds || *pr.ds != row.ds) miss("ds mismatch");
            what << " ds";
        }
        if (!row.nds.empty()) {
            if (!pr.nds || *pr.nds != row.nds) miss("nds mismatch");
            what << " nds";
        }
        if (row.alg >= 0) {
            if (!pr.alg || *pr.alg != row.alg) miss("alg mismatch");
            what << " alg=" << row.alg;
        }
        if (row.alg_prime >= 0) {
            if (!pr.alg_prime || *pr.alg_prime != row.alg_prime) miss("alg' mismatch");
            what << " alg'=" << row.alg_prime;
        }
        rep.record(ok, what.str(), detail);
    }
}

int run_verify(const std::string& scope) {
    if (scope != "classical" && scope != "exceptional" && scope != "all")
        throw std::invalid_argument("scope must be classical, exceptional or all");
    VerifyReport rep;
    if (scope == "classical" || scope == "all") verify_classical(rep);
    if (scope == "exceptional" || scope == "all") verify_exceptional(rep);
    std::cout << rep.checks << " checks, " << rep.failures << " failures\n";
    return rep.failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact class representatives and recognition for simple algebraic groups"};
    app.require_subcommand(1);

    CommonOpts rep_o, cls_o, inv_o, emi_o, ovg_o;
    std::string verify_scope;

    CLI::App* rep = app.add_subcommand("represent", "print a class representative");
    add_group_flags(rep, rep_o, true);
    rep->add_option("--kind", rep_o.kind, "nilpotent or unipotent");
    rep->add_option("--label", rep_o.label, "class label (exceptional types)");
    rep->add_option("--eminent", rep_o.eminent_family, "classical eminent family name (Wl)");
    rep->add_option("--l", rep_o.l, "family parameter l")->each([&](const std::string&) {
        rep_o.has_l = true;
    });

    CLI::App* cls = app.add_subcommand("classify", "identify the class of an element");
    add_group_flags(cls, cls_o, true);
    cls->add_option("--kind", cls_o.kind, "nilpotent or unipotent");
    cls->add_option("--lattice", cls_o.lattice, "sc or ad (exceptional types)");
    cls->add_option("--support", cls_o.support, "comma-separated root digit strings");
    cls->add_option("--matrix-file", cls_o.matrix_file, "file with the natural-module matrix");

    CLI::App* inv = app.add_subcommand("invariants", "print the invariant profile of an element");
    add_group_flags(inv, inv_o, true);
    inv->add_option("--kind", inv_o.kind, "nilpotent or unipotent");
    inv->add_option("--lattice", inv_o.lattice, "sc or ad");
    inv->add_option("--support", inv_o.support, "comma-separated root digit strings");

    CLI::App* emi = app.add_subcommand("eminent", "list the eminent classes of a group");
    add_group_flags(emi, emi_o, true);
    emi->add_option("--kind", emi_o.kind, "nilpotent or unipotent");

    CLI::App* ovg = app.add_subcommand("overgroups",
                                       "maximal subsystem overgroups of a distinguished class");
    add_group_flags(ovg, ovg_o, true);
    ovg->add_option("--kind", ovg_o.kind, "nilpotent or unipotent");
    ovg->add_option("--label", ovg_o.label, "class label");

    CLI::App* ver = app.add_subcommand("verify-tables", "check the frozen tables");
    ver->add_option("scope", verify_scope, "classical, exceptional or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rep->parsed()) return run_represent(rep_o);
        if (cls->parsed()) return run_classify(cls_o);
        if (inv->parsed()) return run_invariants(inv_o);
        if (emi->parsed()) return run_eminent(emi_o);
        if (ovg->parsed()) return run_overgroups(ovg_o);
        if (ver->parsed()) return run_verify(verify_scope);
    } catch (const std::exception& e) {
        std::cerr << "chevrep: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
