#include <algorithm>
#include <set>

#include "catalog_detail.hpp"

namespace linehamd::catalog_detail {

namespace {

// ---------------------------------------------------------------------------
// Bespoke odd-mode catalogs (n = 1..9)
// ---------------------------------------------------------------------------

FragmentPlan odd_n1_plan() {
  Ctx c{1, true};
  FragmentPlan p;
  p.name = "H";
  p.fragment = complete_fragment(1, true);
  DirectRecipe r;
  r.partition_links = {{kMatchingFactor, inf_index(1)}};
  r.pieces = {{c.from("ainf c binf"), c.from("ainf binf")},
              {c.from("ainf binf"), c.from("ainf c binf")}};
  p.recipe = std::move(r);
  return p;
}

FragmentPlan odd_n2_plan() {
  Ctx c{2, true};
  FragmentPlan p;
  p.name = "H";
  p.fragment = complete_fragment(2, true);
  DirectRecipe r;
  r.partition_links = {{kMatchingFactor, 0}};
  r.pieces = {{c.from("ainf a0 c binf"), c.from("ainf c b0 | binf a0"), c.from("ainf b0 binf"),
               c.from("ainf binf | a0 b0")},
              {c.from("ainf a0 binf"), c.from("ainf binf | a0 b0"), c.from("ainf c b0 binf"),
               c.from("ainf b0 | binf c a0")}};
  p.recipe = std::move(r);
  return p;
}

FragmentPlan odd_n3_plan() {
  Ctx c{3, true};
  FragmentPlan p;
  p.name = "H";
  p.fragment = complete_fragment(3, true);
  DirectRecipe r;
  r.partition_links = {{kMatchingFactor, 0}, {kMatchingFactor, 1}};
  auto uv = std::vector<FragmentGraph>{
      c.from("ainf binf | a1 b0 c b1"), c.from("ainf a0 binf | a1 b1"),
      c.from("ainf b1 binf | a0 b0"),   c.from("ainf a1 | binf c a0 b1"),
      c.from("ainf c a1 a0 | binf b0"), c.from("ainf b0 b1 | binf a1")};
  auto upv = std::vector<FragmentGraph>{
      c.from("ainf binf | a1 c b0 b1"), c.from("ainf a0 binf | a1 b1"),
      c.from("ainf c b1 a0 | binf b0"), c.from("ainf b1 | binf c a0 a1"),
      c.from("ainf a1 binf | a0 b0"),   c.from("ainf b0 a1 | binf b1")};
  auto uvp = std::vector<FragmentGraph>{
      c.from("ainf b0 b1 | binf a1"),   c.from("ainf a1 | binf a0 c b1"),
      c.from("ainf b1 binf | a0 b0"),   c.from("ainf binf | a1 a0 b1"),
      c.from("ainf a0 | binf c a1 b0"), c.from("ainf c b0 binf | a1 b1")};
  auto upvp = std::vector<FragmentGraph>{
      c.from("ainf b0 a1 | binf b1"),   c.from("ainf b1 | binf a0 c a1"),
      c.from("ainf a0 | binf c b1 b0"), c.from("ainf binf | a1 a0 b1"),
      c.from("ainf a1 binf | a0 b0"),   c.from("ainf c b0 binf | a1 b1")};
  r.pieces = {uv, upv, uvp, upvp};
  p.recipe = std::move(r);
  return p;
}

std::vector<FragmentPlan> odd_n4_plans() {
  Ctx c{4, true};
  std::vector<FragmentPlan> plans(2);
  {
    FragmentPlan& p = plans[0];
    p.name = "H";
    DirectRecipe r;
    r.partition_links = {{kMatchingFactor, 0}};
    FragmentGraph j1u = c.from("ainf a1 b0 binf | a2 b2");
    FragmentGraph j2u = c.from("binf a1 c b2 | a2 b0 ainf");
    r.pieces = {{j1u, j2u}, {j2u, j1u}};
    p.fragment = j1u.unite(j2u);
    p.recipe = std::move(r);
  }
  {
    FragmentPlan& p = plans[1];
    p.name = "H'";
    p.fragment = subtract(complete_fragment(4, true), plans[0].fragment);
    DirectRecipe r;
    r.partition_links = {{kMatchingFactor, 1}, {kMatchingFactor, 2}};
    auto uv = std::vector<FragmentGraph>{
        c.from("a1 a0 a2 b1 | ainf binf"),      c.from("a1 b2 b0 c ainf | binf b1"),
        c.from("ainf a2 c a0 binf | a1 b1"),    c.from("a1 a2 binf | ainf a0 b1"),
        c.from("ainf b1 b2 binf | a0 b0"),      c.from("binf c b1 b0 | a0 b2 ainf")};
    auto upv = std::vector<FragmentGraph>{
        c.from("ainf c a2 b1 | a1 a0 binf"),    c.from("a1 b2 b0 b1 | ainf binf"),
        c.from("a1 a2 binf | ainf a0 b1"),      c.from("ainf a2 a0 c binf | a1 b1"),
        c.from("ainf b1 b2 binf | a0 b0"),      c.from("binf b1 c b0 | a0 b2 ainf")};
    auto uvp = std::vector<FragmentGraph>{
        c.from("a1 a0 a2 b1 | ainf binf"),      c.from("a1 b2 b0 c ainf | binf b1"),
        c.from("ainf a2 c a0 binf | a1 b1"),    c.from("a1 a2 binf | ainf a0 b1"),
        c.from("binf c b1 b0 | a0 b2 ainf"),    c.from("ainf b1 b2 binf | a0 b0")};
    auto upvp = std::vector<FragmentGraph>{
        c.from("ainf c a2 b1 | a1 a0 binf"),    c.from("a1 b2 b0 b1 | ainf binf"),
        c.from("a1 a2 binf | ainf a0 b1"),      c.from("ainf a2 a0 c binf | a1 b1"),
        c.from("binf b1 c b0 | a0 b2 ainf"),    c.from("ainf b1 b2 binf | a0 b0")};
    r.pieces = {uv, upv, uvp, upvp};
    p.recipe = std::move(r);
  }
  return plans;
}

FragmentPlan four_decomp_plan(const Ctx& c, const std::string& name, int t, std::string_view x1,
                              std::string_view y1, std::string_view x2, std::string_view y2,
                              std::string_view x1p = {}, std::string_view y1p = {},
                              std::string_view x2p = {}, std::string_view y2p = {}) {
  FragmentPlan p;
  p.name = name;
  FourDecompRecipe r;
  r.t = t;
  r.x1 = c.from(x1);
  r.y1 = c.from(y1);
  r.x2 = c.from(x2);
  r.y2 = c.from(y2);
  if (x1p.empty()) {
    // Aliased rows: X1' = Y1, Y1' = X1, and the fallback pair swapped so the
    // lemma's path-end conditions hold literally.
    r.x1p = r.y1;
    r.y1p = r.x1;
    r.x2p = r.y2;
    r.y2p = r.x2;
  } else {
    r.x1p = c.from(x1p);
    r.y1p = c.from(y1p);
    r.x2p = c.from(x2p);
    r.y2p = c.from(y2p);
  }
  p.fragment = r.x1.unite(r.y1);
  p.recipe = std::move(r);
  return p;
}

std::vector<FragmentPlan> odd_n5_plans() {
  Ctx c{5, true};
  std::vector<FragmentPlan> plans;
  plans.push_back(four_decomp_plan(c, "H1", 3, "ainf b1 c a2 a0 binf | a3 b3",
                                   "binf b1 a2 b3 | a3 a0 ainf",
                                   "ainf a0 a2 c b1 binf | a3 b3",
                                   "ainf b1 a2 b3 | a3 a0 binf"));
  plans.push_back(four_decomp_plan(c, "H2", 2, "ainf a1 b0 c b3 binf | a2 b2",
                                   "ainf b3 b0 b2 | a2 a1 binf",
                                   "ainf b3 c b0 a1 binf | a2 b2",
                                   "binf b3 b0 b2 | a2 a1 ainf"));
  FragmentPlan hp;
  hp.name = "H'";
  hp.fragment = subtract(subtract(complete_fragment(5, true), plans[0].fragment),
                         plans[1].fragment);
  DirectRecipe r;
  r.partition_links = {{kMatchingFactor, 1}, {kMatchingFactor, 2}};
  auto uv = std::vector<FragmentGraph>{
      c.from("a1 b2 a0 b3 b1 | ainf binf"),      c.from("binf c a0 b1 | a1 b3 b2 ainf"),
      c.from("ainf a2 b0 a3 binf | a1 b1"),      c.from("a1 c a3 a2 binf | ainf b0 b1"),
      c.from("ainf a3 b1 b2 binf | a0 b0"),      c.from("a0 a1 a3 b2 c ainf | binf b0")};
  auto upv = std::vector<FragmentGraph>{
      c.from("binf c a0 b1 | a1 b3 b2 ainf"),    c.from("a1 b2 a0 b3 b1 | ainf binf"),
      c.from("a1 a3 c ainf | binf a2 b0 b1"),    c.from("ainf a2 a3 b0 binf | a1 b1"),
      c.from("ainf a3 b1 b2 binf | a0 b0"),      c.from("a0 a1 c b2 a3 binf | ainf b0")};
  auto uvp = std::vector<FragmentGraph>{
      c.from("a1 b3 a0 b2 b1 | ainf binf"),      c.from("a1 a0 c binf | ainf b2 b3 b1"),
      c.from("ainf a2 b0 a3 binf | a1 b1"),      c.from("a1 c a3 a2 binf | ainf b0 b1"),
      c.from("a0 b1 a3 b2 c ainf | binf b0"),    c.from("ainf a3 a1 b2 binf | a0 b0")};
  auto upvp = std::vector<FragmentGraph>{
      c.from("a1 b3 a0 c ainf | binf b2 b1"),    c.from("a1 a0 b2 b3 b1 | ainf binf"),
      c.from("a1 c a3 ainf | binf a2 b0 b1"),    c.from("ainf a2 a3 b0 binf | a1 b1"),
      c.from("a0 b1 a3 b2 c binf | ainf b0"),    c.from("ainf b2 a1 a3 binf | a0 b0")};
  r.pieces = {uv, upv, uvp, upvp};
  hp.recipe = std::move(r);
  plans.push_back(std::move(hp));
  return plans;
}

std::vector<FragmentPlan> odd_n6_plans() {
  Ctx c{6, true};
  std::vector<FragmentPlan> plans;
  plans.push_back(four_decomp_plan(c, "H1", 4, "ainf a1 a2 b0 c b3 binf | a4 b4",
                                   "ainf a2 b3 a1 b4 | a4 b0 binf",
                                   "ainf a1 a2 b3 c b0 binf | a4 b4",
                                   "binf b3 a1 b4 | a4 b0 a2 ainf"));
  plans.push_back(four_decomp_plan(c, "H2", 3, "ainf a4 b2 b1 c a0 binf | a3 b3",
                                   "a3 a4 a0 b1 binf | ainf b2 b3",
                                   "ainf b2 a4 a0 c b1 binf | a3 b3",
                                   "binf a0 b1 b2 b3 | a3 a4 ainf"));
  plans.push_back(four_decomp_plan(c, "H3", 2, "ainf b4 b0 a1 a3 binf | a2 b2",
                                   "a2 b4 c a1 binf | ainf b0 a3 b2",
                                   "ainf b4 b0 a3 a1 binf | a2 b2",
                                   "a2 b4 c a1 b0 ainf | binf a3 b2"));
  FragmentPlan hp;
  hp.name = "H'";
  FragmentGraph used = plans[0].fragment.unite(plans[1].fragment).unite(plans[2].fragment);
  hp.fragment = subtract(complete_fragment(6, true), used);
  DirectRecipe r;
  r.partition_links = {{kMatchingFactor, 1}, {kMatchingFactor, 2}};
  auto uv = std::vector<FragmentGraph>{
      c.from("a1 a4 c b2 b0 b3 b1 | ainf binf"), c.from("a1 a0 b4 b2 binf | ainf c a3 b1"),
      c.from("ainf a3 a0 a2 a4 binf | a1 b1"),   c.from("a1 b2 a0 b3 b4 binf | ainf b1"),
      c.from("ainf b3 a4 b1 a2 binf | a0 b0"),   c.from("binf c a2 a3 b4 b1 b0 | a0 ainf")};
  auto upv = std::vector<FragmentGraph>{
      c.from("a1 a4 b3 b0 b2 binf | ainf b1"),   c.from("a1 b2 a0 a3 b4 b1 | ainf binf"),
      c.from("a1 a0 a2 c a4 binf | ainf a3 b1"), c.from("ainf a0 b3 b4 b2 c binf | a1 b1"),
      c.from("ainf b3 b1 a4 a2 binf | a0 b0"),   c.from("ainf c a3 a2 b1 b0 | a0 b4 binf")};
  auto uvp = std::vector<FragmentGraph>{
      c.from("a1 a4 c b2 b0 b3 b1 | ainf binf"), c.from("a1 a0 b4 b2 binf | ainf c a3 b1"),
      c.from("ainf a0 a3 a2 a4 binf | a1 b1"),   c.from("a1 b2 a0 b3 b4 binf | ainf b1"),
      c.from("ainf b3 a4 b1 b0 | a0 a2 c binf"), c.from("ainf a3 b4 b1 a2 binf | a0 b0")};
  auto upvp = std::vector<FragmentGraph>{
      c.from("binf b2 b0 b1 | a1 a4 b3 ainf"),   c.from("a1 b2 a0 b4 a3 b1 | ainf binf"),
      c.from("a1 a0 a3 c ainf | binf a2 a4 b1"), c.from("ainf a0 b3 b4 b2 c binf | a1 b1"),
      c.from("a0 a2 c a4 binf | ainf b1 b3 b0"), c.from("ainf a3 a2 b1 b4 binf | a0 b0")};
  r.pieces = {uv, upv, uvp, upvp};
  hp.recipe = std::move(r);
  plans.push_back(std::move(hp));
  return plans;
}

std::vector<FragmentPlan> odd_n7_plans() {
  Ctx c{7, true};
  std::vector<FragmentPlan> plans;
  plans.push_back(four_decomp_plan(c, "H1", 5, "ainf a0 b2 b3 b4 c b1 binf | a5 b5",
                                   "ainf b1 b2 a3 b4 b5 | a5 a0 binf",
                                   "ainf b1 c b4 b3 b2 a0 binf | a5 b5",
                                   "binf b1 b2 a3 b4 b5 | a5 a0 ainf",
                                   "ainf b1 b2 b3 b4 b5 | a5 a0 binf",
                                   "ainf a0 b2 a3 b4 c b1 binf | a5 b5",
                                   "binf b1 b2 b3 b4 b5 | a5 a0 ainf",
                                   "ainf b1 c b4 a3 b2 a0 binf | a5 b5"));
  plans.push_back(four_decomp_plan(c, "H2", 4, "ainf c a2 a3 a1 b5 b0 binf | a4 b4",
                                   "binf a3 b0 a1 b4 | a4 b5 a2 ainf",
                                   "ainf c a2 b5 a1 a3 b0 binf | a4 b4",
                                   "a4 b5 b0 a1 b4 | ainf a2 a3 binf"));
  plans.push_back(four_decomp_plan(c, "H3", 3, "ainf b2 c a4 b1 b0 a5 binf | a3 b3",
                                   "a3 b1 a5 b2 b0 ainf | binf a4 b3",
                                   "ainf b0 b1 a5 b2 c a4 binf | a3 b3",
                                   "ainf b2 b0 a5 binf | a3 b1 a4 b3"));
  plans.push_back(four_decomp_plan(c, "H4", 2, "ainf b5 b1 b4 a0 c b3 binf | a2 b2",
                                   "a2 b1 a0 b5 b3 ainf | binf b4 b2",
                                   "ainf b3 c a0 b5 b1 b4 binf | a2 b2",
                                   "a2 b1 a0 b4 b2 | ainf b5 b3 binf"));
  plans.push_back(four_decomp_plan(c, "H5", 1, "ainf a5 b3 a2 b4 b0 c binf | a1 b1",
                                   "binf a2 b0 b3 b1 | a1 a5 b4 ainf",
                                   "ainf a5 b4 a2 b3 b0 c binf | a1 b1",
                                   "ainf b4 b0 a2 binf | a1 a5 b3 b1"));
  plans.push_back(four_decomp_plan(c, "H6", 0, "ainf a1 c b5 a3 a4 b2 binf | a0 b0",
                                   "binf b5 b2 a1 a4 b0 | a0 a3 ainf",
                                   "ainf a3 b5 c a1 a4 b2 binf | a0 b0",
                                   "ainf a1 b2 b5 binf | a0 a3 a4 b0"));
  plans.push_back(four_decomp_plan(c, "H7", 3, "a3 c a5 a4 a2 a1 a0 b3 | ainf binf",
                                   "a3 a5 a2 a0 a4 ainf | binf a1 b3",
                                   "a3 c a5 a4 a2 a0 a1 b3 | ainf binf",
                                   "a3 a5 a2 a1 binf | ainf a4 a0 b3"));
  return plans;
}

std::vector<FragmentPlan> odd_n8_plans() {
  Ctx c{8, true};
  std::vector<FragmentPlan> plans;
  plans.push_back(four_decomp_plan(c, "H1", 6, "ainf a0 c b4 b5 b3 b2 b1 binf | a6 b6",
                                   "ainf b1 a2 a3 a5 b4 b6 | a6 a0 binf",
                                   "ainf b1 b2 b3 b5 b4 c a0 binf | a6 b6",
                                   "binf b1 a2 a3 a5 b4 b6 | a6 a0 ainf",
                                   "ainf b1 b2 b3 b5 b4 b6 | a6 a0 binf",
                                   "ainf a0 c b4 a5 a3 a2 b1 binf | a6 b6",
                                   "binf b1 b2 b3 b5 b4 b6 | a6 a0 ainf",
                                   "ainf b1 a2 a3 a5 b4 c a0 binf | a6 b6"));
  plans.push_back(four_decomp_plan(c, "H2", 5, "ainf a2 c b3 b6 b1 b4 b0 binf | a5 b5",
                                   "a5 b3 a6 a4 a1 b0 ainf | binf a2 b5",
                                   "ainf b0 b4 b1 b6 b3 c a2 binf | a5 b5",
                                   "a5 b3 a6 a4 a1 b0 binf | ainf a2 b5",
                                   "a5 b3 b6 b1 b4 b0 ainf | binf a2 b5",
                                   "ainf a2 c b3 a6 a4 a1 b0 binf | a5 b5",
                                   "a5 b3 b6 b1 b4 b0 binf | ainf a2 b5",
                                   "ainf b0 a1 a4 a6 b3 c a2 binf | a5 b5"));
  plans.push_back(four_decomp_plan(c, "H3", 4, "ainf c b0 b6 b2 a3 b1 a5 binf | a4 b4",
                                   "a4 b1 b0 a5 b6 a3 ainf | binf b2 b4",
                                   "ainf c b0 a5 b1 a3 b6 b2 binf | a4 b4",
                                   "a4 b1 b0 b6 a5 binf | ainf a3 b2 b4"));
  plans.push_back(four_decomp_plan(c, "H4", 3, "ainf b6 a1 a5 b2 a0 a4 binf | a3 b3",
                                   "a3 c b2 a4 a5 ainf | binf b6 a0 a1 b3",
                                   "ainf b6 a1 a0 b2 a5 a4 binf | a3 b3",
                                   "a3 c b2 a4 a0 b6 binf | ainf a5 a1 b3"));
  plans.push_back(four_decomp_plan(c, "H5", 2, "ainf b5 c b1 a6 b0 a4 b3 binf | a2 b2",
                                   "binf a6 b5 b1 b3 b0 b2 | a2 a4 ainf",
                                   "ainf a4 b0 a6 b5 c b1 b3 binf | a2 b2",
                                   "a2 a4 b3 b0 b2 | ainf b5 b1 a6 binf"));
  plans.push_back(four_decomp_plan(c, "H6", 1, "ainf a6 a5 a2 b3 a0 b4 binf | a1 b1",
                                   "a1 a6 a2 b4 b3 ainf | binf c a5 a0 b1",
                                   "ainf a6 a5 a0 b3 a2 b4 binf | a1 b1",
                                   "a1 a6 a2 a5 c binf | ainf b3 b4 a0 b1"));
  plans.push_back(four_decomp_plan(c, "H7", 0, "ainf b2 b5 a3 b4 a6 c a1 binf | a0 b0",
                                   "a0 a3 a6 b2 a1 b4 ainf | binf b5 b0",
                                   "ainf b2 a1 c a6 b4 a3 b5 binf | a0 b0",
                                   "a0 a3 a6 b2 b5 b0 | ainf b4 a1 binf"));
  plans.push_back(four_decomp_plan(c, "H8", 0, "a0 b5 b6 a4 a3 a1 a2 b0 | ainf binf",
                                   "a0 a2 b6 c a4 b5 a1 ainf | binf a3 b0",
                                   "a0 b5 a4 b6 a2 a1 a3 b0 | ainf binf",
                                   "ainf a1 b5 b6 c a4 a3 binf | a0 a2 b0"));
  return plans;
}

std::vector<FragmentPlan> odd_n9_plans() {
  Ctx c{9, true};
  std::vector<FragmentPlan> plans;
  plans.push_back(four_decomp_plan(c, "H1", 7, "ainf a0 b2 b4 b5 b6 c a3 b1 binf | a7 b7",
                                   "binf a0 b4 a5 b6 b7 | a7 a3 b2 b1 ainf",
                                   "ainf b1 a3 c b6 b5 b4 b2 a0 binf | a7 b7",
                                   "ainf a0 b4 a5 b6 b7 | a7 a3 b2 b1 binf",
                                   "binf a0 b4 b5 b6 b7 | a7 a3 b2 b1 ainf",
                                   "ainf a0 b2 b4 a5 b6 c a3 b1 binf | a7 b7",
                                   "ainf a0 b4 b5 b6 b7 | a7 a3 b2 b1 binf",
                                   "ainf b1 a3 c b6 a5 b4 b2 a0 binf | a7 b7"));
  plans.push_back(four_decomp_plan(c, "H2", 6, "ainf b2 b5 a7 c b3 a4 a1 b0 binf | a6 b6",
                                   "binf b2 a1 b3 b0 b6 | a6 a7 a4 b5 ainf",
                                   "ainf b5 b2 a1 a4 a7 c b3 b0 binf | a6 b6",
                                   "a6 a7 b5 a4 b3 a1 b0 b6 | ainf b2 binf"));
  plans.push_back(four_decomp_plan(c, "H3", 5, "ainf c b4 b7 a6 a2 a0 b1 b3 binf | a5 b5",
                                   "binf b4 b1 a2 b3 b5 | a5 b7 a0 a6 ainf",
                                   "ainf c b4 b7 a6 a0 a2 b1 b3 binf | a5 b5",
                                   "a5 b7 a0 b1 b4 binf | ainf a6 a2 b3 b5"));
  plans.push_back(four_decomp_plan(c, "H4", 4, "ainf b6 b1 b5 b0 a7 a2 a3 binf | a4 b4",
                                   "binf b5 a2 b6 a3 b0 b4 | a4 c b1 a7 ainf",
                                   "ainf a7 b1 b6 a2 b5 b0 a3 binf | a4 b4",
                                   "ainf b6 a3 a2 a7 b0 b4 | a4 c b1 b5 binf"));
  plans.push_back(four_decomp_plan(c, "H5", 3, "ainf a1 c a0 a4 b7 a2 a5 a6 binf | a3 b3",
                                   "a3 a0 a5 a1 b7 ainf | binf a2 a4 a6 b3",
                                   "ainf a1 c a0 a5 a2 b7 a4 a6 binf | a3 b3",
                                   "ainf b7 a1 a5 a6 b3 | a3 a0 a4 a2 binf"));
  plans.push_back(four_decomp_plan(c, "H6", 2, "ainf a5 b3 b6 a4 b1 b0 c b7 binf | a2 b2",
                                   "a2 b0 a4 a5 b1 b7 b3 ainf | binf b6 b2",
                                   "ainf a5 a4 b1 b0 c b7 b3 b6 binf | a2 b2",
                                   "ainf b3 a5 b1 b7 binf | a2 b0 a4 b6 b2"));
  plans.push_back(four_decomp_plan(c, "H7", 1, "ainf a4 a3 b7 b2 b0 a6 b5 c binf | a1 b1",
                                   "a1 a3 b5 b7 b0 ainf | binf a4 b2 a6 b1",
                                   "ainf b0 b7 a3 a4 b2 a6 b5 c binf | a1 b1",
                                   "a1 a3 b5 b7 b2 b0 a6 b1 | ainf a4 binf"));
  plans.push_back(four_decomp_plan(c, "H8", 0, "ainf a2 b4 a1 a6 a3 a5 a7 binf | a0 b0",
                                   "a0 a7 a1 a2 c a6 b4 a3 ainf | binf a5 b0",
                                   "ainf a3 a6 b4 a2 a1 a7 a5 binf | a0 b0",
                                   "ainf a2 c a6 a1 b4 a3 a5 b0 | a0 a7 binf"));
  plans.push_back(four_decomp_plan(c, "H9", 5, "a5 c b2 b3 a7 b4 b6 a1 a0 b5 | ainf binf",
                                   "a5 b2 a7 b6 a0 b3 b4 ainf | binf a1 b5",
                                   "a5 c b2 a7 b3 b4 b6 a0 a1 b5 | ainf binf",
                                   "ainf b4 a7 b6 a1 binf | a5 b2 b3 a0 b5"));
  return plans;
}

// ---------------------------------------------------------------------------
// Odd-mode parametric pieces
// ---------------------------------------------------------------------------

struct OddSubPieces {
  FragmentGraph c, cp, s, sp, t, tp, r, rp;
  int t_index = 0;
};

struct OddParamPieces {
  FragmentGraph i;
  std::vector<OddSubPieces> subs;  // one entry (Case 1) or two (Case 2)
  FragmentGraph p1, p2;
  int big_t = 0;
  int u1 = 0, u2 = 0;  // encoded labels
};

// The long a_t,b_t paths of the big recipe.
FragmentGraph case1_long_path(const Ctx& c, bool first) {
  int q = c.mod();
  std::vector<FragmentLabel> verts;
  for (int k = 0; k <= q; ++k) {
    int idx = c.wrap(k);
    bool a_side = (k % 2 == 0) == first;
    verts.push_back(a_side ? c.A(idx) : c.B(idx));
  }
  return c.path(verts);
}

OddParamPieces odd_case1_pieces(int n) {
  Ctx c{n, true};
  int m = n / 2;
  OddParamPieces p;
  p.i = parametric_reserved(n, true);
  p.p1 = case1_long_path(c, true);
  p.p2 = case1_long_path(c, false);
  p.big_t = 0;
  p.u1 = encode_label(c.A(0), n);
  p.u2 = encode_label(c.A(1), n);

  OddSubPieces s;
  if (m % 2 == 0) {
    s.c = c.path({c.A(m - 1), c.A(m)}).unite(c.path({c.B(m), c.A(m + 2)}));
    s.cp = c.path({c.A(m), c.B(m)}).unite(c.path({c.A(m + 2), c.A(m - 1)}));
    s.s = c.path({c.Ainf(), c.A(0), c.C(), c.B(1), c.A(2 * m - 5)})
              .unite(c.path({c.Binf(), c.B(2 * m - 3), c.A(2), c.B(2 * m - 2)}));
    s.sp = c.path({c.Ainf(), c.B(2 * m - 3), c.B(1), c.B(2 * m - 2)})
               .unite(c.path({c.Binf(), c.A(0), c.A(2), c.A(2 * m - 5)}));
    s.t = c.path({c.Ainf(), c.B(2 * m - 3), c.B(1), c.A(2 * m - 5)})
              .unite(c.path({c.Binf(), c.A(0), c.A(2), c.B(2 * m - 2)}));
    s.tp = c.path({c.Ainf(), c.A(0), c.C(), c.B(1), c.B(2 * m - 2)})
               .unite(c.path({c.Binf(), c.B(2 * m - 3), c.A(2), c.A(2 * m - 5)}));
    {
      auto t1 = letters(c, 'a', weave(seq(2 * m - 2, m + 2, -2), seq(4, m - 2, 2)));
      auto t2 = letters(c, 'a', weave(seq(2 * m - 5, m + 1, -2), seq(3, m - 3, 2)));
      t2.push_back(c.A(m - 1));
      s.r = c.path(t1).unite(c.path(t2));
    }
    {
      auto t1 = letters(c, 'a', weave(seq(2 * m - 2, m + 2, -2), seq(3, m - 3, 2)));
      auto t2 = letters(c, 'a', weave(seq(2 * m - 5, m + 1, -2), seq(4, m - 2, 2)));
      t2.push_back(c.A(m - 1));
      s.rp = c.path(t1).unite(c.path(t2));
    }
    s.t_index = m;
  } else {
    s.c = c.path({c.B(m - 1), c.B(m + 1)}).unite(c.path({c.A(m + 1), c.B(m - 2)}));
    s.cp = c.path({c.B(m + 1), c.A(m + 1)}).unite(c.path({c.B(m - 2), c.B(m - 1)}));
    s.s = c.path({c.Ainf(), c.A(0), c.C(), c.B(1), c.B(2 * m - 5)})
              .unite(c.path({c.Binf(), c.B(2 * m - 3), c.A(2), c.A(2 * m - 2)}));
    s.sp = c.path({c.Ainf(), c.B(2 * m - 3), c.B(1), c.A(2 * m - 2)})
               .unite(c.path({c.Binf(), c.A(0), c.A(2), c.B(2 * m - 5)}));
    s.t = c.path({c.Ainf(), c.B(2 * m - 3), c.B(1), c.B(2 * m - 5)})
              .unite(c.path({c.Binf(), c.A(0), c.A(2), c.A(2 * m - 2)}));
    s.tp = c.path({c.Ainf(), c.A(0), c.C(), c.B(1), c.A(2 * m - 2)})
               .unite(c.path({c.Binf(), c.B(2 * m - 3), c.A(2), c.B(2 * m - 5)}));
    s.r = c.path(letters(c, 'a', weave(seq(2 * m - 2, m + 3, -2), seq(4, m - 1, 2))))
              .unite(c.path(letters(c, 'a', weave(seq(2 * m - 5, m, -2), seq(3, m - 2, 2)))));
    s.rp = c.path(letters(c, 'a', weave(seq(2 * m - 2, m + 3, -2), seq(3, m - 2, 2))))
               .unite(c.path(letters(c, 'a', weave(seq(2 * m - 5, m, -2), seq(4, m - 1, 2)))));
    s.t_index = m + 1;
  }
  p.subs = {s};
  return p;
}

FragmentGraph case2_long_path(const Ctx& c, int m, bool first) {
  // P_1 = [a_{m+1}, a_m, b_{m-1}, a_{m-2}, ..., a_{m+2}, b_{m+1}] and its
  // letter-swapped mirror; index walk descends from m, letters alternate with
  // a on the parity of m for the first path.
  int q = c.mod();
  std::vector<FragmentLabel> verts;
  bool m_even = m % 2 == 0;
  if (first) {
    verts.push_back(c.A(m + 1));
    for (int k = 0; k < q - 1; ++k) {
      int idx = c.wrap(m - k);
      bool a_side = (idx % 2 == 0) == m_even || (m_even && idx % 2 == 0) ||
                    (!m_even && idx % 2 == 1);
      a_side = m_even ? idx % 2 == 0 : idx % 2 == 1;
      verts.push_back(a_side ? c.A(idx) : c.B(idx));
    }
    verts.push_back(c.B(m + 1));
  } else {
    verts.push_back(m_even ? c.A(m + 1) : c.B(m + 1));
    for (int k = 0; k < q - 1; ++k) {
      int idx = c.wrap(m - k);
      bool a_side = m_even ? idx % 2 == 1 : idx % 2 == 0;
      verts.push_back(a_side ? c.A(idx) : c.B(idx));
    }
    verts.push_back(m_even ? c.B(m + 1) : c.A(m + 1));
  }
  return c.path(verts);
}

// Mirror a -> b and b -> a (used for the second sub of Case 2).
FragmentGraph ab_mirror(const FragmentGraph& g) {
  int n = g.n();
  FragmentGraph out(n, g.odd_mode());
  auto flip = [&](int code) {
    FragmentLabel l = decode_label(code, n);
    if (l.kind == LabelKind::A) return encode_label(FragmentLabel::b(l.index), n);
    if (l.kind == LabelKind::B) return encode_label(FragmentLabel::a(l.index), n);
    return code;
  };
  for (const auto& [x, y] : g.edges()) out.add_edge_code(flip(x), flip(y));
  return out;
}

OddParamPieces odd_case2_pieces(int n) {
  Ctx c{n, true};
  int m = (n - 1) / 2;
  OddParamPieces p;
  p.i = parametric_reserved(n, true);
  p.p1 = case2_long_path(c, m, true);
  p.p2 = case2_long_path(c, m, false);
  p.big_t = m + 1;
  if (m % 2 == 0) {
    p.u1 = encode_label(c.B(1), n);
    p.u2 = encode_label(c.A(1), n);
  } else {
    p.u1 = encode_label(c.A(1), n);
    p.u2 = encode_label(c.B(1), n);
  }

  OddSubPieces s1, s2;
  if (m % 2 == 0) {
    s1.c = c.path({c.B(m), c.B(m + 1)})
               .unite(c.path({c.B(m + 3), c.A(m + 1)}))
               .unite(c.path({c.A(m + 2), c.A(m)}));
    s1.cp = c.path({c.B(m + 1), c.B(m + 3)})
                .unite(c.path({c.A(m + 1), c.A(m + 2)}))
                .unite(c.path({c.A(m), c.B(m)}));
    s1.s = c.path({c.Ainf(), c.B(1), c.C(), c.A(2), c.A(2 * m - 2)})
               .unite(c.path({c.Binf(), c.B(0), c.A(3), c.A(2 * m - 1)}));
    s1.sp = c.path({c.Ainf(), c.B(0), c.A(2), c.A(2 * m - 1)})
                .unite(c.path({c.Binf(), c.B(1), c.A(3), c.A(2 * m - 2)}));
    s1.t = c.path({c.Ainf(), c.B(0), c.A(2), c.A(2 * m - 2)})
               .unite(c.path({c.Binf(), c.B(1), c.A(3), c.A(2 * m - 1)}));
    s1.tp = c.path({c.Ainf(), c.B(1), c.C(), c.A(2), c.A(2 * m - 1)})
                .unite(c.path({c.Binf(), c.B(0), c.A(3), c.A(2 * m - 2)}));
    s1.t_index = m;
    s2.c = c.path({c.A(m), c.A(m + 1)})
               .unite(c.path({c.B(m + 1), c.B(m + 2)}))
               .unite(c.path({c.B(m), c.B(m + 3)}));
    s2.cp = c.path({c.A(m + 1), c.B(m + 1)})
                .unite(c.path({c.B(m + 2), c.B(m)}))
                .unite(c.path({c.B(m + 3), c.A(m)}));
    s2.s = ab_mirror(s1.s);
    s2.sp = ab_mirror(s1.sp);
    s2.t = ab_mirror(s1.t);
    s2.tp = ab_mirror(s1.tp);
    s2.t_index = m + 1;
  } else {
    s1.c = c.path({c.A(4), c.A(2 * m - 2)})
               .unite(c.path({c.B(2 * m - 2), c.B(2 * m - 1)}))
               .unite(c.path({c.A(2 * m - 1), c.B(5)}));
    s1.cp = c.path({c.A(4), c.A(2 * m - 1)})
                .unite(c.path({c.B(2 * m - 1), c.B(5)}))
                .unite(c.path({c.A(2 * m - 2), c.B(2 * m - 2)}));
    s1.s = c.path({c.Ainf(), c.A(1), c.C(), c.B(2), c.A(2 * m - 3)})
               .unite(c.path({c.Binf(), c.B(0), c.A(3), c.A(2 * m - 4)}));
    s1.sp = c.path({c.Ainf(), c.B(0), c.B(2), c.A(2 * m - 4)})
                .unite(c.path({c.Binf(), c.A(1), c.A(3), c.A(2 * m - 3)}));
    s1.t = c.path({c.Ainf(), c.B(0), c.B(2), c.A(2 * m - 3)})
               .unite(c.path({c.Binf(), c.A(1), c.A(3), c.A(2 * m - 4)}));
    s1.tp = c.path({c.Ainf(), c.A(1), c.C(), c.B(2), c.A(2 * m - 4)})
                .unite(c.path({c.Binf(), c.B(0), c.A(3), c.A(2 * m - 3)}));
    s1.t_index = 2 * m - 2;
    s2.c = c.path({c.B(4), c.B(2 * m - 1)})
               .unite(c.path({c.A(2 * m - 1), c.A(2 * m - 2)}))
               .unite(c.path({c.B(2 * m - 2), c.B(5)}));
    s2.cp = c.path({c.B(4), c.B(2 * m - 2)})
                .unite(c.path({c.A(2 * m - 2), c.B(5)}))
                .unite(c.path({c.A(2 * m - 1), c.B(2 * m - 1)}));
    s2.s = ab_mirror(s1.s);
    s2.sp = ab_mirror(s1.sp);
    s2.t = ab_mirror(s1.t);
    s2.tp = ab_mirror(s1.tp);
    s2.t_index = 2 * m - 1;
  }
  p.subs = {s1, s2};
  return p;
}

// Amalgamated designs for the odd-mode Case-2 Q shapes: per sub-recipe two
// R-hat paths joining the S-path ends to the C-path ends.
struct OddCase2Designs {
  std::vector<std::vector<std::vector<int>>> paths;  // R1, R1', R2, R2'
};

OddCase2Designs odd_case2_designs(const Ctx& c, int m, const FragmentGraph& pool, int q) {
  int n = c.n;
  OddCase2Designs out;
  std::vector<PathDesign> specs;
  if (m % 2 == 0) {
    std::vector<int> coverage;
    for (int v = 4; v <= m - 1; ++v) coverage.push_back(v);
    for (int v = m + 4; v <= 2 * m - 3; ++v) coverage.push_back(v);
    std::vector<std::vector<std::pair<int, int>>> ends = {
        {{2 * m - 2, m + 2}, {2 * m - 1, m + 3}}, {{2 * m - 2, m + 3}, {2 * m - 1, m + 2}}};
    specs.assign(4, PathDesign{ends, coverage, {}});
  } else {
    std::vector<int> coverage;
    for (int v = 6; v <= 2 * m - 5; ++v) coverage.push_back(v);
    std::vector<std::vector<std::pair<int, int>>> ends = {
        {{2 * m - 4, 4}, {2 * m - 3, 5}}, {{2 * m - 4, 5}, {2 * m - 3, 4}}};
    specs.assign(4, PathDesign{ends, coverage, {}});
    // The merged plan exchanges e_i across the two halves; the primed shapes
    // must carry the {m, m+1} pair.
    specs[1].required_pairs.push_back({m, m + 1});
    specs[3].required_pairs.push_back({m, m + 1});
  }
  out.paths = design_index_paths(n, true, specs, pool, q);
  return out;
}

FragmentGraph sub_fragment(const OddSubPieces& s) {
  return s.c.unite(s.cp).unite(s.s).unite(s.sp).unite(s.r).unite(s.rp);
}

OddSubPieces rotate_sub(const Ctx& c, const OddSubPieces& s, int rot) {
  OddSubPieces out;
  out.c = s.c.rotated(rot);
  out.cp = s.cp.rotated(rot);
  out.s = s.s.rotated(rot);
  out.sp = s.sp.rotated(rot);
  out.t = s.t.rotated(rot);
  out.tp = s.tp.rotated(rot);
  out.r = s.r.rotated(rot);
  out.rp = s.rp.rotated(rot);
  out.t_index = c.wrap(s.t_index + 2 * rot);
  return out;
}

OddCCRecipe sub_to_recipe(const OddSubPieces& s) {
  OddCCRecipe r;
  r.s = s.s;
  r.sp = s.sp;
  r.t_piece = s.t;
  r.tp = s.tp;
  r.r = s.r;
  r.rp = s.rp;
  r.c = s.c;
  r.cp = s.cp;
  r.t = s.t_index;
  return r;
}

FragmentPlan odd_cc_plan(const Ctx& c, const std::string& name, const OddSubPieces& s) {
  FragmentPlan plan;
  plan.name = name;
  plan.recipe = sub_to_recipe(s);
  plan.fragment = sub_fragment(s);
  plan.connectors.push_back(
      connector_from("S family", {s.s, s.sp}, inf_targets(c)));
  plan.connectors.push_back(
      connector_from("T family", {s.t, s.tp}, inf_targets(c)));
  return plan;
}

}  // namespace

Catalog catalog_odd_impl(int n) {
  if (n < 1) throw ValidationError("catalog requires n >= 1");
  Catalog cat;
  cat.n = n;
  cat.odd_mode = true;
  switch (n) {
    case 1:
      cat.plans.push_back(odd_n1_plan());
      return cat;
    case 2:
      cat.plans.push_back(odd_n2_plan());
      return cat;
    case 3:
      cat.plans.push_back(odd_n3_plan());
      return cat;
    case 4:
      cat.plans = odd_n4_plans();
      return cat;
    case 5:
      cat.plans = odd_n5_plans();
      return cat;
    case 6:
      cat.plans = odd_n6_plans();
      return cat;
    case 7:
      cat.plans = odd_n7_plans();
      return cat;
    case 8:
      cat.plans = odd_n8_plans();
      return cat;
    case 9:
      cat.plans = odd_n9_plans();
      return cat;
    default:
      break;
  }

  Ctx c{n, true};
  bool case1 = n % 2 == 0;
  int q = case1 ? n - 1 : (n - 1) / 2;
  OddParamPieces p = case1 ? odd_case1_pieces(n) : odd_case2_pieces(n);
  FragmentGraph z = c.empty();
  FragmentGraph qq = c.empty();
  for (const auto& s : p.subs) {
    z = z.unite(s.c).unite(s.cp).unite(s.s).unite(s.sp);
    qq = qq.unite(s.r).unite(s.rp);
  }

  std::vector<FragmentGraph> z_rot;
  FragmentGraph z_all = c.empty();
  bool disjoint = true;
  for (int i = 0; i < q; ++i) {
    z_rot.push_back(z.rotated(i));
    disjoint = disjoint && z_all.edge_disjoint(z_rot.back());
    if (disjoint) z_all = z_all.unite(z_rot.back());
  }
  add_check(cat.construction_checks, "Z-orbit pairwise edge-disjoint", disjoint);
  add_check(cat.construction_checks, "I edge-disjoint from Z-orbit", p.i.edge_disjoint(z_all));
  add_check(cat.construction_checks, "rho fixes I and ^A I",
            p.i.rotated(1) == p.i &&
                amalgamate(p.i.rotated(1)).same_edge_multiset(amalgamate(p.i)));
  if (case1) add_orbit_checks(cat, z, qq);

  FragmentGraph pool = subtract(subtract(complete_fragment(n, true), p.i), z_all);

  if (case1) {
    // Q_i built per rotation; fragments at i = 0 and i = m merge with I into
    // the big plan.
    const OddSubPieces& base = p.subs[0];
    int m = n / 2;
    std::vector<Multigraph> targets;
    for (int i = 0; i < q; ++i) {
      targets.push_back(amalgamate(base.r.rotated(i)));
      targets.push_back(amalgamate(base.rp.rotated(i)));
    }
    std::vector<FragmentGraph> shapes = split_pool(pool, targets);

    FragmentPlan big;
    big.name = "H0+I";
    OddBigRecipe r;
    r.x = c.empty();
    r.x.add_edge(c.Ainf(), c.C());
    r.x.add_edge(c.C(), c.Binf());
    r.xp = c.empty();
    r.xp.add_edge(c.Ainf(), c.Binf());
    r.p1 = p.p1;
    r.p2 = p.p2;
    r.t = p.big_t;
    r.u1_label = p.u1;
    r.u2_label = p.u2;
    OddSubPieces h1 = base;
    h1.r = shapes[0];
    h1.rp = shapes[1];
    OddSubPieces h2 = rotate_sub(c, base, m);
    h2.r = shapes[2 * m];
    h2.rp = shapes[2 * m + 1];
    r.h1 = sub_to_recipe(h1);
    r.h2 = sub_to_recipe(h2);
    big.recipe = r;
    big.fragment = r.x.unite(r.xp).unite(r.p1).unite(r.p2).unite(sub_fragment(h1)).unite(
        sub_fragment(h2));
    big.connectors.push_back(
        odd_big_connector(c, "S family with P1", h1.s, h1.sp, r.x.unite(r.p1), p.u1));
    big.connectors.push_back(
        odd_big_connector(c, "T family with P1", h1.tp, h1.t, r.x.unite(r.p1), p.u1));
    big.connectors.push_back(
        odd_big_connector(c, "S family with P2", h2.s, h2.sp, r.x.unite(r.p2), p.u2));
    big.connectors.push_back(
        odd_big_connector(c, "T family with P2", h2.tp, h2.t, r.x.unite(r.p2), p.u2));
    cat.plans.push_back(std::move(big));

    for (int i = 1; i < q; ++i) {
      if (i == m) continue;
      OddSubPieces s = rotate_sub(c, base, i);
      s.r = shapes[2 * i];
      s.rp = shapes[2 * i + 1];
      cat.plans.push_back(odd_cc_plan(c, "H" + std::to_string(i), s));
    }
    return cat;
  }

  // Case 2: n odd. Q_0 carries the merged big plan with the edge exchanges.
  int m = (n - 1) / 2;
  const OddSubPieces& z1 = p.subs[0];
  const OddSubPieces& z2 = p.subs[1];
  OddCase2Designs designs = odd_case2_designs(c, m, pool, q);
  std::vector<Multigraph> targets;
  for (int i = 0; i < q; ++i)
    for (int d = 0; d < 4; ++d)
      targets.push_back(rotate_amalg(amalg_of_index_paths(n, true, designs.paths[d]), i, n));
  {
    // Orbit accounting over a representative Q_0: the vector depends only on
    // the amalgamated pairs, so any label realization of the designs works.
    FragmentGraph rep = c.empty();
    for (const auto& design : designs.paths)
      for (const auto& path : design)
        for (size_t k = 0; k + 1 < path.size(); ++k) {
          int i = path[k], j = path[k + 1];
          bool added = false;
          for (auto [x, y] : {std::pair{c.A(i), c.A(j)}, {c.A(i), c.B(j)}, {c.B(i), c.A(j)},
                              {c.B(i), c.B(j)}}) {
            int xc = encode_label(x, n), yc = encode_label(y, n);
            if (!rep.has_edge_code(xc, yc)) {
              rep.add_edge_code(xc, yc);
              added = true;
              break;
            }
          }
          if (!added) throw InternalError("could not realize the orbit representative");
        }
    add_orbit_checks(cat, z, rep);
  }

  int am = encode_label(c.A(m), n), am1 = encode_label(c.A(m + 1), n);
  int bm = encode_label(c.B(m), n), bm1 = encode_label(c.B(m + 1), n);
  int bm2 = encode_label(c.B(m + 2), n);

  auto build_big = [&](const std::vector<FragmentGraph>& shapes, int e_choice) -> FragmentPlan {
    FragmentPlan big;
    big.name = "H0+I";
    OddBigRecipe r;
    r.x = c.empty();
    r.x.add_edge(c.Ainf(), c.C());
    r.x.add_edge(c.C(), c.Binf());
    r.xp = c.empty();
    r.xp.add_edge(c.Ainf(), c.Binf());
    r.p1 = p.p1;
    r.p2 = p.p2;
    r.t = p.big_t;
    r.u1_label = p.u1;
    r.u2_label = p.u2;
    OddSubPieces h1 = z1;
    OddSubPieces h2 = z2;
    h1.r = shapes[0];
    h1.rp = shapes[1];
    h2.r = shapes[2];
    h2.rp = shapes[3];
    if (m % 2 == 0) {
      // C_2 loses {a_m a_{m+1}, b_{m+1} b_{m+2}} to P_1/P_2 and picks up the
      // crossing edges from I.
      h2.c.remove_edge_code(am, am1);
      h2.c.remove_edge_code(bm1, bm2);
      h2.c.add_edge_code(am, bm1);
      h2.c.add_edge_code(am1, bm2);
    } else {
      // R-hat pieces exchange e_i for the crossing edges from I; both
      // pairings of {e_1, e_2} and {e_1', e_2'} are tried.
      bool swap_pair = e_choice & 1;
      VertexPair e1p = swap_pair ? VertexPair{bm, bm1} : VertexPair{am, am1};
      VertexPair e2p = swap_pair ? VertexPair{am, am1} : VertexPair{bm, bm1};
      bool cross_first = (e_choice & 2) != 0;
      VertexPair e1x = cross_first ? VertexPair{am, bm1} : VertexPair{bm, am1};
      VertexPair e2x = cross_first ? VertexPair{bm, am1} : VertexPair{am, bm1};
      h1.rp.remove_edge_code(e1p.first, e1p.second);
      h1.rp.add_edge_code(e1x.first, e1x.second);
      h2.rp.remove_edge_code(e2p.first, e2p.second);
      h2.rp.add_edge_code(e2x.first, e2x.second);
    }
    r.h1 = sub_to_recipe(h1);
    r.h2 = sub_to_recipe(h2);
    big.recipe = r;
    big.fragment = r.x.unite(r.xp).unite(r.p1).unite(r.p2).unite(sub_fragment(h1)).unite(
        sub_fragment(h2));
    big.connectors.push_back(
        odd_big_connector(c, "S family with P1", h1.s, h1.sp, r.x.unite(r.p1), p.u1));
    big.connectors.push_back(
        odd_big_connector(c, "T family with P1", h1.tp, h1.t, r.x.unite(r.p1), p.u1));
    big.connectors.push_back(
        odd_big_connector(c, "S family with P2", h2.s, h2.sp, r.x.unite(r.p2), p.u2));
    big.connectors.push_back(
        odd_big_connector(c, "T family with P2", h2.tp, h2.t, r.x.unite(r.p2), p.u2));
    return big;
  };

  // Forced placement of the exchanged edges inside the R'-hat shapes, trying
  // the pairings until the merged plan's report passes.
  std::vector<FragmentGraph> shapes;
  FragmentPlan big;
  bool placed = false;
  if (m % 2 == 0) {
    shapes = split_pool(pool, targets);
    big = build_big({shapes[0], shapes[1], shapes[2], shapes[3]}, 0);
    placed = true;
  } else {
    for (int choice = 0; choice < 4 && !placed; ++choice) {
      bool swap_pair = choice & 1;
      VertexPair e1p = swap_pair ? VertexPair{bm, bm1} : VertexPair{am, am1};
      VertexPair e2p = swap_pair ? VertexPair{am, am1} : VertexPair{bm, bm1};
      std::vector<std::pair<int, VertexPair>> forced{{1, e1p}, {3, e2p}};
      try {
        std::vector<FragmentGraph> attempt = split_pool(pool, targets, forced);
        FragmentPlan candidate =
            build_big({attempt[0], attempt[1], attempt[2], attempt[3]}, choice);
        bool pass = check_plan_preconditions(candidate, n, true).all_pass();
        if (pass || choice == 3) {
          shapes = std::move(attempt);
          big = std::move(candidate);
          placed = true;
        }
      } catch (const InternalError&) {
        if (choice == 3) throw;
      }
    }
  }
  cat.plans.push_back(std::move(big));

  for (int i = 1; i < q; ++i) {
    OddSubPieces s1r = rotate_sub(c, z1, i);
    s1r.r = shapes[4 * i];
    s1r.rp = shapes[4 * i + 1];
    cat.plans.push_back(odd_cc_plan(c, "H" + std::to_string(i) + "a", s1r));
    OddSubPieces s2r = rotate_sub(c, z2, i);
    s2r.r = shapes[4 * i + 2];
    s2r.rp = shapes[4 * i + 3];
    cat.plans.push_back(odd_cc_plan(c, "H" + std::to_string(i) + "b", s2r));
  }
  return cat;
}

}  // namespace linehamd::catalog_detail
