#include <gtest/gtest.h>

#include "labelflow/labeling.hpp"

namespace labelflow {
namespace {

TEST(Labeling, SingletonsStartUnique) {
  Labeling lab = Labeling::singletons(4);
  EXPECT_EQ(lab.distinct_labels(), 4u);
  for (NodeId v = 0; v < 4; ++v) {
    EXPECT_EQ(lab.label(v), v);
    EXPECT_EQ(lab.population(v), 1u);
    EXPECT_DOUBLE_EQ(lab.strength(v), 1.0);
  }
}

TEST(Labeling, AssignKeepsPopulations) {
  Labeling lab = Labeling::singletons(5);
  lab.assign(1, 0);
  lab.assign(2, 0);
  lab.assign(2, 0);
  EXPECT_EQ(lab.population(0), 3u);
  EXPECT_EQ(lab.population(1), 0u);
  EXPECT_EQ(lab.distinct_labels(), 3u);
  EXPECT_TRUE(lab.populations_consistent());
  lab.assign(0, 4);
  EXPECT_EQ(lab.population(0), 2u);
  EXPECT_EQ(lab.population(4), 2u);
  EXPECT_EQ(lab.distinct_labels(), 3u);
}

TEST(Labeling, StrengthIsClamped) {
  Labeling lab = Labeling::singletons(2);
  lab.set_strength(0, -0.5);
  lab.set_strength(1, 3.0);
  EXPECT_DOUBLE_EQ(lab.strength(0), 0.0);
  EXPECT_DOUBLE_EQ(lab.strength(1), 1.0);
}

TEST(Labeling, CompactByFirstOccurrence) {
  Labeling lab({7, 3, 7, 9, 3}, 10);
  lab.compact();
  EXPECT_EQ(std::vector<Label>(lab.labels().begin(), lab.labels().end()),
            (std::vector<Label>{0, 1, 0, 2, 1}));
  EXPECT_EQ(lab.label_space(), 3u);
  EXPECT_EQ(lab.population(0), 2u);
}

TEST(Labeling, CompactSparseLabels) {
  std::vector<Label> dense;
  std::vector<Label> sparse{4000000000u, 12, 4000000000u};
  EXPECT_EQ(compact_labels(sparse, dense), 2u);
  EXPECT_EQ(dense, (std::vector<Label>{0, 1, 0}));
}

TEST(Labeling, RejectsOutOfSpaceLabels) {
  EXPECT_THROW(Labeling({0, 5}, 3), std::invalid_argument);
}

}  // namespace
}  // namespace labelflow
