#include <doctest.h>

#include "packtk/classify.hpp"
#include "packtk/gen.hpp"

using namespace packtk;

namespace {

KnapsackInstance inst_n100(std::vector<Item> items) {
  KnapsackInstance inst;
  inst.n = 100;
  inst.items = std::move(items);
  return inst;
}

}  // namespace

TEST_CASE("five-way classification on the worked thresholds") {
  auto inst = inst_n100({{"big", 50, 50, 1, true},
                         {"hor", 50, 1, 1, true},
                         {"ver", 1, 50, 1, true},
                         {"mid", 5, 5, 1, true},
                         {"tiny", 1, 1, 1, true}});
  auto c = classify_items(inst, Rat(1, 10), Rat(1, 100));
  CHECK(c.labels[0] == ItemClass::Large);
  CHECK(c.labels[1] == ItemClass::Horizontal);
  CHECK(c.labels[2] == ItemClass::Vertical);
  CHECK(c.labels[3] == ItemClass::Intermediate);  // sides in (1, 10]
  CHECK(c.labels[4] == ItemClass::Small);
  CHECK(c.is_skewed(1));
  CHECK(c.is_skewed(2));
}

TEST_CASE("threshold boundaries follow the half-open intervals") {
  // side exactly eps_small*N counts small; side exactly eps_large*N is not large
  auto inst = inst_n100({{"a", 1, 1, 1, true}, {"b", 10, 10, 1, true}});
  auto c = classify_items(inst, Rat(1, 10), Rat(1, 100));
  CHECK(c.labels[0] == ItemClass::Small);
  CHECK(c.labels[1] == ItemClass::Intermediate);
}

TEST_CASE("classification partitions every item set") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n_items = 25;
    spec.region = 60;
    auto inst = std::get<KnapsackInstance>(generate_instance(spec));
    auto c = classify_items(inst, Rat(1, 4), Rat(1, 16));
    CHECK(c.labels.size() == inst.items.size());  // exactly one label each
  }
}

TEST_CASE("choose_thresholds: empty intermediate class when all items are huge") {
  auto inst = inst_n100({{"a", 90, 95, 7, true}, {"b", 80, 85, 5, true}});
  auto choice = choose_thresholds(inst, Rat(1, 2));
  CHECK(choice.intermediate_profit == 0);
}

TEST_CASE("choose_thresholds avoids the straddled band") {
  // eps = 1/2, N = 100: the level chain is 1/4, 1/16, 1/256, ... and both item
  // sides land in the band (6.25, 25]. Some deeper band is free of sides, so
  // the chosen pair must carry zero intermediate profit and skip level 1.
  auto inst = inst_n100({{"w1", 10, 90, 5, true}, {"w2", 13, 90, 2, true}});
  auto choice = choose_thresholds(inst, Rat(1, 2));
  CHECK(choice.intermediate_profit == 0);
  CHECK(choice.level > 1);
  // with every side in a band, the cheaper of the two is taken
  auto inst2 = inst_n100({{"a", 10, 3, 5, true}, {"b", 13, 2, 9, true}});
  auto choice2 = choose_thresholds(inst2, Rat(1, 2));
  CHECK(choice2.intermediate_profit == 0);
}

TEST_CASE("choose_thresholds averaging bound on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.seed = seed + 1000;
    spec.n_items = 30;
    spec.region = 64;
    auto inst = std::get<KnapsackInstance>(generate_instance(spec));
    const Rat eps(1, 3);
    auto choice = choose_thresholds(inst, eps);
    CHECK(Rat(choice.intermediate_profit) <= eps * Rat(total_profit(inst.items)));
    CHECK(choice.eps_large <= eps);
    CHECK(choice.eps_large > choice.eps_small);
  }
}

TEST_CASE("band profits over all levels sum to at most twice the total profit") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenSpec spec;
    spec.seed = seed + 2000;
    spec.n_items = 20;
    spec.region = 100;
    auto inst = std::get<KnapsackInstance>(generate_instance(spec));
    const Rat eps(1, 3);
    // rebuild the level chain the way choose_thresholds does and add up bands
    std::vector<Rat> chain;
    Rat cur = eps * eps;
    for (int i = 0; i < 7 && cur * Rat(inst.n) >= Rat(1); ++i) {
      chain.push_back(cur);
      cur = cur * cur;
    }
    chain.push_back(cur);
    std::int64_t across = 0;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      const Rat hi = chain[j] * Rat(inst.n), lo = chain[j + 1] * Rat(inst.n);
      for (const auto& it : inst.items) {
        if ((Rat(it.w) > lo && Rat(it.w) <= hi) || (Rat(it.h) > lo && Rat(it.h) <= hi))
          across += it.p;
      }
    }
    CHECK(across <= 2 * total_profit(inst.items));
  }
}

TEST_CASE("chosen pair is a consecutive shrink-map step") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.seed = seed + 3000;
    spec.n_items = 15;
    spec.region = 80;
    auto inst = std::get<KnapsackInstance>(generate_instance(spec));
    auto choice = choose_thresholds(inst, Rat(1, 3));
    CHECK(choice.eps_small == choice.eps_large * choice.eps_large);  // f(x) = x^2
  }
}

TEST_CASE("choose_thresholds survives deep shrink chains without overflow") {
  KnapsackInstance inst;
  inst.n = 1000;
  inst.items = {{"a", 500, 500, 3, true}};
  auto choice = choose_thresholds(inst, Rat(1, 10));
  CHECK(choice.intermediate_profit == 0);
}
