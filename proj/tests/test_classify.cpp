#include "fixtures.hpp"

#include "vxe/classify.hpp"
#include "vxe/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace vxe;

namespace {

const Criterion& find(const std::vector<Criterion>& list, const std::string& name)
{
    for (const auto& c : list)
        if (c.name == name)
            return c;
    throw std::runtime_error("no criterion named " + name);
}

} // namespace

TEST(Thresholds, ExactValuesAndRounding)
{
    EXPECT_TRUE(classify_energy(0, 2.0).hyperenergetic);
    EXPECT_TRUE(classify_energy(0, 2.0 - 1e-15).hyperenergetic);
    EXPECT_TRUE(classify_energy(0, 2.0 - 1e-15).borderline);
    EXPECT_FALSE(classify_energy(0, 1.9999).hyperenergetic);
    EXPECT_FALSE(classify_energy(0, 1.9999).borderline);

    EXPECT_FALSE(classify_energy(0, 1.0).hypoenergetic);
    EXPECT_FALSE(classify_energy(0, 1.0 - 1e-15).hypoenergetic);
    EXPECT_TRUE(classify_energy(0, 1.0 - 1e-15).borderline);
    EXPECT_TRUE(classify_energy(0, 0.999).hypoenergetic);
    EXPECT_FALSE(classify_energy(0, 1.5).borderline);
}

TEST(ClassifyVertex, Examples)
{
    Graph s5 = fixture::star(5);
    auto center = classify_vertex(s5, 0);
    EXPECT_TRUE(center.hyperenergetic);
    EXPECT_TRUE(center.borderline);
    EXPECT_FALSE(center.hypoenergetic);

    auto leaf = classify_vertex(s5, 1);
    EXPECT_TRUE(leaf.hypoenergetic);
    EXPECT_FALSE(leaf.hyperenergetic);

    auto k33 = classify_vertex(fixture::kbip(3, 3), 0);
    EXPECT_FALSE(k33.hyperenergetic);
    EXPECT_FALSE(k33.hypoenergetic);
    EXPECT_THROW(classify_vertex(s5, 5), OutOfRange);
}

TEST(ClassifyGraph, IsolatedVerticesAreCompletelyHypoenergetic)
{
    auto c = classify_graph(Graph(4));
    EXPECT_TRUE(c.completely_hypoenergetic);
    EXPECT_TRUE(c.completely_non_hyperenergetic);
    EXPECT_FALSE(c.completely_non_hypoenergetic);
}

TEST(ClassifyGraph, K33)
{
    auto c = classify_graph(fixture::kbip(3, 3));
    EXPECT_TRUE(c.completely_non_hypoenergetic);
    EXPECT_TRUE(c.completely_non_hyperenergetic);
    EXPECT_FALSE(c.completely_hypoenergetic);
    EXPECT_FALSE(c.completely_hyperenergetic);
}

TEST(ClassifyGraph, CirculantIsNowhereHyperenergetic)
{
    Graph g = families::generate(families::Circulant{17, {1, 4}});
    auto c = classify_graph(g);
    EXPECT_TRUE(c.completely_non_hyperenergetic);
    EXPECT_TRUE(c.completely_non_hypoenergetic);
    for (const auto& v : c.vertices)
        EXPECT_NEAR(v.energy, 1.6, 5e-2);
}

TEST(Criteria, RegularSmallDegree)
{
    auto c6 = criteria_check(fixture::cycle(6));
    const auto& small = find(c6, "regular_degree_at_most_4");
    EXPECT_TRUE(small.holds);
    EXPECT_EQ(small.conclusion, Conclusion::completely_non_hyperenergetic);
    EXPECT_EQ(small.parameters, "d=2");
    EXPECT_TRUE(conclusion_satisfied(small, all_vertex_energies(fixture::cycle(6))));
}

TEST(Criteria, RegularAtLeastOne)
{
    auto k2 = criteria_check(fixture::k2());
    const auto& c = find(k2, "regular_degree_at_least_1");
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.conclusion, Conclusion::completely_non_hypoenergetic);
    EXPECT_TRUE(conclusion_satisfied(c, all_vertex_energies(fixture::k2())));
    EXPECT_FALSE(find(criteria_check(Graph(3)), "regular_degree_at_least_1").holds);
}

TEST(Criteria, LargeStarHasEnergyBelowOrder)
{
    Graph s = fixture::star(1000);
    auto list = criteria_check(s);
    const auto& c = find(list, "bipartite_small_part");
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.parameters, "n1=1,n2=999");
    auto e = all_vertex_energies(s);
    EXPECT_NEAR(e.total, 2.0 * std::sqrt(999.0), 1e-8);
    EXPECT_LT(e.total, 1000.0);
    EXPECT_TRUE(conclusion_satisfied(c, e));
    EXPECT_TRUE(find(list, "tree_small_part").holds);
    EXPECT_TRUE(find(list, "independent_set").holds);
}

TEST(Criteria, QuadrangleFreeHighDegree)
{
    // 8-regular, girth 6: both hyperenergetic criteria apply.
    Graph g = fixture::projective_plane_incidence(7);
    ASSERT_EQ(g.order(), 114u);
    ASSERT_TRUE(is_quadrangle_free(g));
    auto list = criteria_check(g);
    const auto& regular = find(list, "quadrangle_free_regular_degree_at_least_8");
    const auto& min_degree = find(list, "quadrangle_free_min_degree");
    EXPECT_TRUE(regular.holds);
    EXPECT_TRUE(min_degree.holds);
    EXPECT_FALSE(find(list, "regular_degree_at_most_4").holds);

    auto e = all_vertex_energies(g);
    EXPECT_TRUE(conclusion_satisfied(regular, e));
    // Transitive: (2(q+1) + 2(q^2+q) sqrt(q)) / (2(q^2+q+1)) at q = 7.
    double expected = (16.0 + 112.0 * std::sqrt(7.0)) / 114.0;
    for (double x : e.per_vertex)
        EXPECT_NEAR(x, expected, 1e-8);
    auto c = classify_graph(g);
    EXPECT_TRUE(c.completely_hyperenergetic);
}

TEST(Criteria, HeawoodGraphIsSmallDegree)
{
    Graph g = fixture::projective_plane_incidence(2);
    ASSERT_EQ(g.order(), 14u);
    auto list = criteria_check(g);
    EXPECT_TRUE(find(list, "regular_degree_at_most_4").holds);
    EXPECT_FALSE(find(list, "quadrangle_free_min_degree").holds);
    EXPECT_TRUE(conclusion_satisfied(find(list, "regular_degree_at_most_4"), all_vertex_energies(g)));
}

TEST(Criteria, PendantVertices)
{
    Graph g = fixture::k23_pendant();
    auto list = criteria_check(g);
    const auto& c = find(list, "pendant_vertices");
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.vertices, std::vector<Vertex>{3});
    EXPECT_TRUE(conclusion_satisfied(c, all_vertex_energies(g)));

    // K2 components are excluded: their vertices have energy exactly 1.
    Graph with_k2 = fixture::make(5, {{0, 1}, {2, 3}, {3, 4}});
    auto with_k2_list = criteria_check(with_k2);
    const auto& d = find(with_k2_list, "pendant_vertices");
    EXPECT_EQ(d.vertices, (std::vector<Vertex>{2, 4}));
    EXPECT_FALSE(find(criteria_check(fixture::k2()), "pendant_vertices").holds);
}

TEST(Criteria, IndependentSet)
{
    Graph s = fixture::star(30); // 0.4 sqrt(29) = 2.15 >= 1
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v < 30; ++v)
        leaves.push_back(v);
    auto given_list = criteria_check(s, std::span<const Vertex>(leaves));
    const auto& given = find(given_list, "independent_set");
    EXPECT_TRUE(given.holds);
    EXPECT_EQ(given.parameters, "n1=1,n2=29");

    std::vector<Vertex> not_independent{0, 1};
    EXPECT_FALSE(find(criteria_check(s, std::span<const Vertex>(not_independent)), "independent_set").holds);

    std::vector<Vertex> out_of_range{40};
    EXPECT_FALSE(find(criteria_check(s, std::span<const Vertex>(out_of_range)), "independent_set").holds);

    // Default: larger bipartition part; odd cycles have none.
    EXPECT_TRUE(find(criteria_check(s), "independent_set").holds);
    EXPECT_FALSE(find(criteria_check(fixture::cycle(5)), "independent_set").holds);
}

TEST(Criteria, TreeSmallPart)
{
    // Spider with 4 legs of length 2: parts {center, tips} = 5 and {middles} = 4.
    Graph spider = fixture::make(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8}});
    EXPECT_FALSE(find(criteria_check(spider), "tree_small_part").holds);
    // Path 0-1-2 with four leaves on each end: parts {0, 2} and the rest, 4 * 2 <= 11.
    Graph caterpillar = fixture::make(
        11, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10}});
    auto list = criteria_check(caterpillar);
    const auto& c = find(list, "tree_small_part");
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.parameters, "n1=2,n2=9");
    EXPECT_TRUE(conclusion_satisfied(c, all_vertex_energies(caterpillar)));
    EXPECT_FALSE(find(criteria_check(fixture::cycle(6)), "tree_small_part").holds);
}

TEST(Criteria, ConclusionsAgreeOnCorpus)
{
    for (const Graph& g : random_corpus(41, 12, 150)) {
        auto e = all_vertex_energies(g);
        for (const auto& c : criteria_check(g)) {
            if (c.holds) {
                EXPECT_TRUE(conclusion_satisfied(c, e)) << c.name;
            }
        }
    }
}

TEST(Criteria, NoNontrivialCompletelyHypoenergeticGraph)
{
    for (const Graph& g : random_corpus(43, 12, 150)) {
        if (g.size() == 0)
            continue;
        EXPECT_FALSE(classify_graph(g).completely_hypoenergetic);
    }
}

TEST(Conclusions, Names)
{
    EXPECT_EQ(to_string(Conclusion::energy_below_order), "energy_below_order");
    EXPECT_EQ(to_string(Conclusion::vertices_hypoenergetic), "vertices_hypoenergetic");
}
