#include <catch2/catch_amalgamated.hpp>

#include "chevrep/rootsys.hpp"

using namespace chevrep;

namespace {

int positive_count(char t, int n) {
    switch (t) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

int coxeter_number(char t, int n) {
    switch (t) {
        case 'A': return n + 1;
        case 'B':
        case 'C': return 2 * n;
        case 'D': return 2 * n - 2;
        case 'E': return n == 6 ? 12 : (n == 7 ? 18 : 30);
        case 'F': return 12;
        case 'G': return 6;
    }
    return -1;
}

bool has_label(const std::vector<Subsystem>& subs, const std::string& label) {
    for (const auto& s : subs)
        if (s.label == label) return true;
    return false;
}

bool has_row(const std::vector<GenSubsysRow>& rows,
             std::vector<std::pair<char, int>> comps) {
    std::sort(comps.begin(), comps.end(),
              [](auto& a, auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    for (const auto& r : rows)
        if (r.components == comps) return true;
    return false;
}

}  // namespace

TEST_CASE("root counts and basic invariants for every type") {
    std::vector<std::pair<char, int>> cases = {{'A', 1}, {'A', 2}, {'A', 5}, {'B', 2}, {'B', 3},
                                               {'B', 5}, {'C', 2}, {'C', 4}, {'D', 4}, {'D', 5},
                                               {'D', 7}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4},
                                               {'G', 2}};
    for (auto [t, n] : cases) {
        RootSystem rs(t, n);
        INFO(rs.name());
        CHECK(rs.num_positive() == positive_count(t, n));
        for (const auto& r : rs.positive_roots()) {
            for (int c : r) CHECK(c >= 0);
            CHECK(root_height(r) >= 1);
        }
        const auto& cm = rs.cartan();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    CHECK(cm[i][j] == 2);
                else {
                    CHECK(cm[i][j] <= 0);
                    CHECK(cm[i][j] >= -3);
                }
            }
        // canonical order starts with the simple roots in index order
        for (int i = 1; i <= n; ++i) CHECK(rs.positive_root(i - 1) == rs.simple_root(i));
        // highest root coefficient sum + 1 = Coxeter number
        CHECK(root_height(rs.highest_root()) + 1 == coxeter_number(t, n));
        // pairing of any two positive roots is a Cartan-like integer
        const auto& theta = rs.highest_root();
        CHECK(rs.pairing(theta, theta) == 2);
    }
}

TEST_CASE("invalid types rejected") {
    CHECK_THROWS_AS(build_root_system('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('F', 5), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system('X', 3), std::invalid_argument);
}

TEST_CASE("epsilon coordinate views") {
    RootSystem c4('C', 4);
    RootVec two_eps1 = root_from_bourbaki_string(c4, "2221");
    CHECK(c4.is_root(two_eps1));
    CHECK(c4.to_epsilon(two_eps1) == std::vector<int>{2, 0, 0, 0});

    RootSystem d5('D', 5);
    RootVec r = root_from_bourbaki_string(d5, "11101");
    CHECK(d5.to_epsilon(r) == std::vector<int>{1, 0, 0, 0, 1});

    RootSystem b3('B', 3);
    CHECK(b3.to_epsilon(b3.simple_root(3)) == std::vector<int>{0, 0, 1});
    CHECK(b3.to_epsilon(root_from_bourbaki_string(b3, "111")) == std::vector<int>{1, 0, 0});
    CHECK(b3.to_epsilon(b3.highest_root()) == std::vector<int>{1, 1, 0});

    RootSystem a2('A', 2);
    CHECK(a2.to_epsilon(a2.highest_root()) == std::vector<int>{1, 0, -1});

    CHECK_THROWS_AS(RootSystem('F', 4).to_epsilon({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("bourbaki strings") {
    RootSystem f4('F', 4);
    RootVec hs = root_from_bourbaki_string(f4, "1232");
    CHECK(f4.is_root(hs));
    CHECK(f4.is_short(hs));
    // highest short root: no taller short root exists
    for (const auto& r : f4.positive_roots())
        if (f4.is_short(r)) CHECK(root_height(r) <= root_height(hs));
    CHECK(root_from_bourbaki_string(f4, "0100") == f4.simple_root(2));
    CHECK_THROWS_AS(root_from_bourbaki_string(f4, "9999"), std::invalid_argument);
    CHECK_THROWS_AS(root_from_bourbaki_string(f4, "110"), std::invalid_argument);

    RootSystem d10('D', 10);
    RootVec wide = root_from_bourbaki_string(d10, "1,1,1,1,1,1,1,1,0,1");
    CHECK(d10.is_root(wide));
    CHECK(f4.root_string(hs) == "1232");
}

TEST_CASE("root lengths") {
    RootSystem g2('G', 2);
    CHECK(g2.two_lengths());
    CHECK(g2.is_short(g2.simple_root(1)));
    CHECK(g2.is_long(g2.simple_root(2)));
    CHECK(g2.is_long(g2.highest_root()));

    RootSystem f4('F', 4);
    int longs = 0, shorts = 0;
    for (const auto& r : f4.positive_roots()) (f4.is_long(r) ? longs : shorts)++;
    CHECK(longs == 12);
    CHECK(shorts == 12);

    RootSystem e7('E', 7);
    CHECK_FALSE(e7.two_lengths());
    for (const auto& r : e7.positive_roots()) CHECK(e7.is_long(r));

    RootSystem e8('E', 8);
    CHECK(e8.highest_root() == RootVec{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("beta_l roots of D_n") {
    CHECK(beta_l_root(5, 4) == RootVec{0, 1, 1, 0, 1});
    CHECK(beta_l_root(4, 3) == RootVec{1, 1, 0, 1});
    CHECK_THROWS_AS(beta_l_root(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(beta_l_root(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(beta_l_root(3, 3), std::invalid_argument);
    for (int n = 4; n <= 9; ++n) {
        RootSystem rs('D', n);
        for (int l = (n + 3) / 2; l <= n; ++l) {
            if (!(2 * l > n + 1)) continue;
            INFO("n=" << n << " l=" << l);
            CHECK(rs.is_positive_root(beta_l_root(n, l)));
        }
    }
}

TEST_CASE("closed subsystems via extended diagram") {
    RootSystem g2('G', 2);
    auto subs = closed_subsystems(g2);
    CHECK(subs.size() == 2);
    CHECK(has_label(subs, "A_2"));
    CHECK(has_label(subs, "A_1~A_1"));

    RootSystem a1('A', 1);
    CHECK(closed_subsystems(a1).empty());

    RootSystem e8('E', 8);
    auto e8subs = closed_subsystems(e8);
    CHECK(has_label(e8subs, "D_8"));
    CHECK(has_label(e8subs, "A_1E_7"));
    CHECK(has_label(e8subs, "A_8"));
    CHECK(has_label(e8subs, "A_2E_6"));
    CHECK(has_label(e8subs, "A_4A_4"));

    RootSystem b2('B', 2);
    auto b2subs = closed_subsystems(b2);
    CHECK(b2subs.size() == 1);
    CHECK(b2subs[0].label == "A_1A_1");  // the D_2 of long roots

    // embedded simple roots really are roots and pairwise compatible
    for (const auto* batch : {&subs, &e8subs}) {
        for (const auto& s : *batch)
            for (const auto& c : s.components)
                for (size_t i = 0; i < c.simple_roots.size(); ++i) {
                    const auto& rs = (batch == &subs) ? g2 : e8;
                    CHECK(rs.is_root(c.simple_roots[i]));
                    for (size_t j = 0; j < i; ++j)
                        CHECK(rs.pairing(c.simple_roots[i], c.simple_roots[j]) <= 0);
                }
    }

    // component pairing matrices match freshly built Cartan data by type
    for (const auto& s : e8subs)
        for (const auto& c : s.components) {
            RootSystem sub(c.type, c.rank);
            // row sums of Cartan integers are invariants under node relabeling
            std::vector<int> got, want;
            for (int i = 0; i < c.rank; ++i) {
                int g = 0, w = 0;
                for (int j = 0; j < c.rank; ++j) {
                    g += e8.pairing(c.simple_roots[i], c.simple_roots[j]);
                    w += sub.cartan()[i][j];
                }
                got.push_back(g);
                want.push_back(w);
            }
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
}

TEST_CASE("maximal generalized subsystem rows") {
    auto b42 = maximal_generalized_subsystems('B', 4, 2);
    CHECK(b42.size() == 3);
    CHECK(has_row(b42, {{'B', 1}, {'B', 3}}));
    CHECK(has_row(b42, {{'B', 2}, {'B', 2}}));
    CHECK(has_row(b42, {{'D', 4}}));

    CHECK(maximal_generalized_subsystems('A', 7, 3).empty());

    auto d63 = maximal_generalized_subsystems('D', 6, 3);
    CHECK(d63.size() == 5);
    CHECK(has_row(d63, {{'D', 2}, {'D', 4}}));
    CHECK(has_row(d63, {{'D', 3}, {'D', 3}}));
    CHECK(has_row(d63, {{'B', 5}}));
    CHECK(has_row(d63, {{'B', 1}, {'B', 4}}));
    CHECK(has_row(d63, {{'B', 2}, {'B', 3}}));

    auto c35 = maximal_generalized_subsystems('C', 3, 5);
    CHECK(c35.size() == 1);
    CHECK(has_row(c35, {{'C', 1}, {'C', 2}}));
    auto c32 = maximal_generalized_subsystems('C', 3, 2);
    CHECK(c32.size() == 2);
    CHECK(has_row(c32, {{'D', 3}}));

    CHECK_THROWS_AS(maximal_generalized_subsystems('E', 6, 2), std::invalid_argument);
}
