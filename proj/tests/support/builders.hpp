#pragma once

// Small fixture categories shared across the test suites. Each builder
// returns a freshly constructed value so tests can mutate raw copies freely.

#include <memory>
#include <utility>
#include <vector>

#include "fincat/fincat.hpp"

namespace fixtures {

inline fincat::FinCat terminal_cat() {
  return fincat::poset_category({"*"}, {});
}

// 0 < 1
inline fincat::FinCat arrow_cat() {
  return fincat::poset_category({"0", "1"}, {{"0", "1"}});
}

// 0 < 1 < 2
inline fincat::FinCat chain3_cat() {
  return fincat::poset_category({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
}

// b <- a -> c, free on the graph with edges f, g
inline fincat::FinCat span_cat() {
  fincat::FinGraph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"f", "a", "b"}, {"g", "a", "c"}};
  return fincat::free_category_on_acyclic_graph(g);
}

// two parallel edges a -> b
inline fincat::FinCat parallel_pair_cat() {
  fincat::FinGraph g;
  g.vertices = {"a", "b"};
  g.edges = {{"u", "a", "b"}, {"v", "a", "b"}};
  return fincat::free_category_on_acyclic_graph(g);
}

inline fincat::GroupTable z2_table() {
  return {{"e", "s"}, "e", {{"e", "s"}, {"s", "e"}}};
}

inline fincat::GroupTable z3_table() {
  return {{"e", "a", "b"}, "e", {{"e", "a", "b"}, {"a", "b", "e"}, {"b", "e", "a"}}};
}

inline fincat::FinCat z2_cat() { return fincat::delooping(z2_table()); }
inline fincat::FinCat z3_cat() { return fincat::delooping(z3_table()); }

// subsets of {1,2}: 0 < 1,2 < 12
inline fincat::FinCat lattice2_cat() {
  return fincat::poset_category({"0", "1", "2", "12"},
                                {{"0", "1"}, {"0", "2"}, {"1", "12"}, {"2", "12"}});
}

// subsets of {1,2,3}
inline fincat::FinCat lattice3_cat() {
  return fincat::poset_category(
      {"0", "1", "2", "3", "12", "13", "23", "123"},
      {{"0", "1"},
       {"0", "2"},
       {"0", "3"},
       {"1", "12"},
       {"1", "13"},
       {"2", "12"},
       {"2", "23"},
       {"3", "13"},
       {"3", "23"},
       {"12", "123"},
       {"13", "123"},
       {"23", "123"}});
}

// a below b,c; b,c below both d and e; d,e incomparable. The span b <- a -> c
// has two minimal upper bounds, so it has cocones but no colimit.
inline fincat::FinCat twopeaks_cat() {
  return fincat::poset_category(
      {"a", "b", "c", "d", "e"},
      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"b", "e"}, {"c", "e"}});
}

// opens of the two point space: E (empty) < U1, U2 < X
inline fincat::FinCat opens2_cat() {
  return fincat::poset_category({"E", "U1", "U2", "X"},
                                {{"E", "U1"}, {"E", "U2"}, {"U1", "X"}, {"U2", "X"}});
}

// two objects A, B with a split idempotent e = i∘r on B, r∘i = 1_A
inline fincat::FinCat split_idem_cat() {
  fincat::RawCategory raw;
  raw.objects = {"A", "B"};
  raw.morphisms = {{"1A", "A", "A"}, {"1B", "B", "B"}, {"i", "A", "B"},
                   {"r", "B", "A"}, {"e", "B", "B"}};
  raw.identity = {{"A", "1A"}, {"B", "1B"}};
  raw.compose[{"1A", "1A"}] = "1A";
  raw.compose[{"1B", "1B"}] = "1B";
  raw.compose[{"i", "1A"}] = "i";
  raw.compose[{"1B", "i"}] = "i";
  raw.compose[{"r", "1B"}] = "r";
  raw.compose[{"1A", "r"}] = "r";
  raw.compose[{"e", "1B"}] = "e";
  raw.compose[{"1B", "e"}] = "e";
  raw.compose[{"r", "i"}] = "1A";
  raw.compose[{"i", "r"}] = "e";
  raw.compose[{"e", "i"}] = "i";
  raw.compose[{"r", "e"}] = "r";
  raw.compose[{"e", "e"}] = "e";
  return fincat::require_category(raw);
}

inline std::shared_ptr<const fincat::FinCat> shared(fincat::FinCat c) {
  return std::make_shared<const fincat::FinCat>(std::move(c));
}

}  // namespace fixtures
