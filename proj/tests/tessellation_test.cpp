#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coxhull/convexity.hpp"
#include "coxhull/error.hpp"
#include "support.hpp"

using namespace coxhull;
using coxhull::oracle::bfs;

namespace {

// Family index and offset of the fixed line of `r`, if it is in the table.
std::optional<Wall> find_wall(const Tessellation& t, const GroupElement& r) {
  const Vec2 x = t.group().base_barycenter;
  const Vec2 mid = RingScalar(1, 0, 2) * (x + r.apply(x));
  for (std::size_t f = 0; f < t.families().size(); ++f) {
    const RingScalar k = dot(t.families()[f].projector, mid);
    if (!k.is_integer()) continue;
    const Wall w{static_cast<int>(f), k.p()};
    if (t.reflection(w) == r) return w;
  }
  return std::nullopt;
}

std::vector<std::int64_t> per_family_counts(const Tessellation& t, const Chamber& a, const Chamber& b) {
  std::vector<std::int64_t> n(t.families().size(), 0);
  for (const auto& w : t.separating_walls(a, b)) ++n[static_cast<std::size_t>(w.family)];
  std::sort(n.begin(), n.end());
  return n;
}

}  // namespace

TEST(WallFamilies, CountsPerType) {
  EXPECT_EQ(Tessellation::build(TypeTag::A2Tilde).families().size(), 3u);
  EXPECT_EQ(Tessellation::build(TypeTag::C2Tilde).families().size(), 4u);
  EXPECT_EQ(Tessellation::build(TypeTag::G2Tilde).families().size(), 6u);
  EXPECT_EQ(Tessellation::build(TypeTag::I2Infinity).families().size(), 1u);
}

TEST(WallFamilies, G2RefinesA2) {
  const auto a2 = Tessellation::build(TypeTag::A2Tilde);
  const auto g2 = Tessellation::build(TypeTag::G2Tilde);
  for (const auto& fa : a2.families()) {
    const bool shared = std::any_of(g2.families().begin(), g2.families().end(), [&](const WallFamily& fg) {
      return fg.normal == fa.normal && fg.spacing == fa.spacing;
    });
    EXPECT_TRUE(shared);
  }
}

// Every reflection w s w^-1 with l(w) <= 6 fixes a wall of the table.
TEST(WallFamilies, CompleteForConjugatesOfGenerators) {
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (const auto& c : t.ball(6)) {
      for (const auto& s : t.group().generators) {
        const GroupElement r = compose(compose(c.element, s), inverse(c.element));
        EXPECT_TRUE(find_wall(t, r).has_value()) << tag_name(tag) << " " << t.word_string(c);
      }
    }
  }
}

TEST(Chambers, IdentityIsTheBaseChamber) {
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    const Chamber base = t.chamber_of_identity();
    EXPECT_EQ(base.barycenter, t.group().base_barycenter);
    EXPECT_EQ(t.element_to_chamber(t.group().identity()), base);
    EXPECT_EQ(t.word_string(base), "");
  }
}

TEST(Chambers, GeneratorNeighborSharesAPanel) {
  const auto t = Tessellation::build(TypeTag::A2Tilde);
  const Chamber base = t.chamber_of_identity();
  const Chamber s1 = t.element_to_chamber(t.group().generators[0]);
  EXPECT_EQ(s1, t.neighbor(base, 0));
  EXPECT_EQ(t.separation_count(base, s1), 1);
  EXPECT_TRUE(t.separates(t.panel_wall(base, 0), base, s1));
  const Chamber s1s2 = t.from_word("12");
  EXPECT_EQ(oracle::bfs_distance(t, base, s1s2), 2);
}

TEST(Chambers, NeighborsAreDistinctAndSymmetric) {
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (const auto& c : t.ball(4)) {
      const auto ns = t.neighbors(c);
      ASSERT_EQ(ns.size(), t.rank());
      std::set<ChamberKey> keys;
      for (const auto& [i, n] : ns) {
        EXPECT_NE(n, c);
        keys.insert(n.key);
        EXPECT_EQ(t.neighbor(n, i), c);
      }
      EXPECT_EQ(keys.size(), t.rank());
    }
  }
}

TEST(Separation, SpecExamples) {
  const auto t = Tessellation::build(TypeTag::A2Tilde);
  const Chamber base = t.chamber_of_identity();
  EXPECT_TRUE(t.separating_walls(base, base).empty());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(t.separating_walls(base, t.neighbor(base, i)).size(), 1u);
  const Chamber c121 = t.from_word("121");
  EXPECT_EQ(t.separation_count(base, c121), 3);
  EXPECT_EQ(oracle::bfs_distance(t, base, c121), 3);
  const Chamber c1213 = t.from_word("1213");
  EXPECT_EQ(t.separating_walls(base, c1213).size(), 4u);
  EXPECT_EQ(oracle::bfs_distance(t, base, c1213), 4);
  for (const auto& w : t.separating_walls(base, c1213)) EXPECT_TRUE(t.separates(w, base, c1213));
}

TEST(Separation, WallsDoNotSeparateAChamberFromItself) {
  const auto t = Tessellation::build(TypeTag::G2Tilde);
  const Chamber c = t.from_word("1232");
  for (int k = -3; k <= 3; ++k)
    for (int f = 0; f < 6; ++f) EXPECT_FALSE(t.separates({f, k}, c, c));
}

// Separating-wall count equals BFS distance for every chamber within 8.
TEST(SeparationProperty, DistanceFactorization) {
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    const Chamber base = t.chamber_of_identity();
    const auto r = bfs(t, base, 8);
    for (const auto& c : r.order) EXPECT_EQ(t.separation_count(base, c), r.dist.at(c.key)) << tag_name(tag);
  }
}

TEST(SeparationProperty, DistanceFactorizationFromOtherSources) {
  std::mt19937_64 rng(5);
  for (TypeTag tag : oracle::kPlanarTypes) {
    const auto t = Tessellation::build(tag);
    for (int trial = 0; trial < 10; ++trial) {
      const Chamber src = oracle::random_chamber(t, rng, 10);
      const auto r = bfs(t, src, 6);
      for (const auto& c : r.order) ASSERT_EQ(t.separation_count(src, c), r.dist.at(c.key));
    }
  }
}

// Crossing one panel changes every distance by exactly one.
TEST(SeparationProperty, Parity) {
  std::mt19937_64 rng(6);
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (int trial = 0; trial < 200; ++trial) {
      const Chamber x = oracle::random_chamber(t, rng, 10);
      const Chamber y = oracle::random_chamber(t, rng, 10);
      for (const auto& [i, n] : t.neighbors(y))
        EXPECT_EQ(std::abs(t.separation_count(x, y) - t.separation_count(x, n)), 1);
    }
  }
}

// Crossing a panel flips the side of the panel's wall and of no other wall;
// the wall's reflection carries the chamber to its neighbor.
TEST(SeparationProperty, PanelCrossingFlipsExactlyOneWall) {
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (const auto& c : t.ball(5)) {
      for (std::size_t i = 0; i < t.rank(); ++i) {
        const Chamber n = t.neighbor(c, static_cast<int>(i));
        const Wall w = t.panel_wall(c, static_cast<int>(i));
        const auto walls = t.separating_walls(c, n);
        ASSERT_EQ(walls.size(), 1u);
        EXPECT_EQ(walls.front(), w);
        EXPECT_EQ(t.side(w, c.barycenter), -t.side(w, n.barycenter));
        EXPECT_EQ(t.element_to_chamber(compose(t.reflection(w), c.element)), n);
      }
    }
  }
}

// Reflecting across any wall moves a chamber to the other side of it.
TEST(SeparationProperty, ReflectionSwapsSides) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> off(-4, 4);
  for (TypeTag tag : oracle::kPlanarTypes) {
    const auto t = Tessellation::build(tag);
    std::uniform_int_distribution<int> fam(0, static_cast<int>(t.families().size()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Chamber c = oracle::random_chamber(t, rng, 8);
      const Wall w{fam(rng), off(rng)};
      const Chamber m = t.element_to_chamber(compose(t.reflection(w), c.element));
      EXPECT_TRUE(t.separates(w, c, m));
      EXPECT_EQ(t.separation_count(c, t.element_to_chamber(compose(t.reflection(w), m.element))), 0);
    }
  }
}

TEST(SeparationProperty, Equivariance) {
  std::mt19937_64 rng(9);
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (int trial = 0; trial < 200; ++trial) {
      const Chamber a = oracle::random_chamber(t, rng, 8);
      const Chamber b = oracle::random_chamber(t, rng, 8);
      const GroupElement g = oracle::random_chamber(t, rng, 6).element;
      const Chamber ga = t.element_to_chamber(compose(g, a.element));
      const Chamber gb = t.element_to_chamber(compose(g, b.element));
      EXPECT_EQ(t.separation_count(ga, gb), t.separation_count(a, b));
      EXPECT_EQ(per_family_counts(t, ga, gb), per_family_counts(t, a, b));
    }
  }
}

TEST(Words, ParseErrors) {
  const auto t = Tessellation::build(TypeTag::A2Tilde);
  EXPECT_THROW(t.parse_word("124"), Error);
  EXPECT_THROW(t.parse_word("1a"), Error);
  EXPECT_TRUE(t.parse_word("").empty());
  const auto i2 = Tessellation::build(TypeTag::I2Infinity);
  EXPECT_THROW(i2.parse_word("3"), Error);
}

TEST(WordsProperty, GeodesicWordRoundTrip) {
  std::mt19937_64 rng(10);
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (int trial = 0; trial < 200; ++trial) {
      const Chamber c = oracle::random_chamber(t, rng, 12);
      const std::string w = t.word_string(c);
      EXPECT_EQ(t.from_word(w), c);
      EXPECT_EQ(static_cast<std::int64_t>(w.size()), t.separation_count(t.chamber_of_identity(), c));
    }
  }
}

TEST(Words, GeodesicPrefersLowestGenerator) {
  const auto t = Tessellation::build(TypeTag::A2Tilde);
  EXPECT_EQ(t.word_string(t.from_word("212")), "121");
}

TEST(Locate, FindsTheChamberOfItsBarycenter) {
  std::mt19937_64 rng(13);
  for (TypeTag tag : oracle::kAllTypes) {
    const auto t = Tessellation::build(tag);
    for (int trial = 0; trial < 100; ++trial) {
      const Chamber c = oracle::random_chamber(t, rng, 10);
      EXPECT_EQ(t.locate(c.barycenter), c);
    }
  }
}

TEST(Locate, PointOnAWallIsRejected) {
  const auto t = Tessellation::build(TypeTag::C2Tilde);
  EXPECT_THROW(t.key_of_point({RingScalar(1), RingScalar(1, 0, 3)}), std::invalid_argument);
}

TEST(Serialization, ChamberAndWall) {
  const auto t = Tessellation::build(TypeTag::A2Tilde);
  const auto j = t.chamber_to_json(t.from_word("21"));
  EXPECT_EQ(j["word"], "21");
  EXPECT_EQ(j["barycenter"].size(), 2u);
  EXPECT_EQ(j["barycenter"][0].size(), 3u);
  EXPECT_EQ(Tessellation::wall_to_json({2, -3}).dump(), R"({"family":2,"offset":-3})");
}

TEST(Coarsening, MultiplicityAndBase) {
  const auto g2 = Tessellation::build(TypeTag::G2Tilde);
  const auto a2 = Tessellation::build(TypeTag::A2Tilde);
  const Coarsening c(g2, a2);
  EXPECT_EQ(c.multiplicity(), 2);
  EXPECT_EQ(c.coarsen(g2.chamber_of_identity()), a2.chamber_of_identity());
  EXPECT_THROW(Coarsening(a2, g2), Error);
}

TEST(CoarseningProperty, PreimageSizeIsConstant) {
  const auto g2 = Tessellation::build(TypeTag::G2Tilde);
  const auto a2 = Tessellation::build(TypeTag::A2Tilde);
  const Coarsening c(g2, a2);
  std::map<ChamberKey, int> counts;
  for (const auto& f : g2.ball(16)) ++counts[c.coarsen(f).key];
  // Coarse chambers well inside the fine ball are fully covered.
  for (const auto& coarse : a2.ball(4)) EXPECT_EQ(counts[coarse.key], c.multiplicity()) << a2.word_string(coarse);
}

TEST(CoarseningProperty, CommutesWithSharedReflections) {
  const auto g2 = Tessellation::build(TypeTag::G2Tilde);
  const auto a2 = Tessellation::build(TypeTag::A2Tilde);
  const Coarsening c(g2, a2);
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> off(-3, 3), fam(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Chamber f = oracle::random_chamber(g2, rng, 10);
    const Wall coarse_wall{fam(rng), off(rng)};
    const auto& cf = a2.families()[static_cast<std::size_t>(coarse_wall.family)];
    const auto it = std::find_if(g2.families().begin(), g2.families().end(),
                                 [&](const WallFamily& x) { return x.normal == cf.normal && x.spacing == cf.spacing; });
    ASSERT_NE(it, g2.families().end());
    const Wall fine_wall{static_cast<int>(it - g2.families().begin()), coarse_wall.offset};
    const Chamber reflected_fine = g2.element_to_chamber(compose(g2.reflection(fine_wall), f.element));
    const Chamber coarse = c.coarsen(f);
    const Chamber reflected_coarse = a2.element_to_chamber(compose(a2.reflection(coarse_wall), coarse.element));
    EXPECT_EQ(c.coarsen(reflected_fine), reflected_coarse);
  }
}
