#pragma once

#include <string>
#include <vector>

#include "ltest/graph.hpp"
#include "ltest/oracle.hpp"
#include "ltest/semigroup.hpp"

namespace ltest::fixtures {

std::string path(const std::string& name);
std::string read(const std::string& name);
TransitionGraph graph(const std::string& name);
AcceptorDfa acceptor(const std::string& name);
FiniteSemigroup semigroup(const std::string& name);

// Small named graphs used across the tests.
TransitionGraph loop(std::size_t letters = 1);   // one node, every letter a loop
TransitionGraph z2_swap();                       // a swaps 0 and 1, b fixes both
TransitionGraph reset2();                        // a: all -> 0, b: all -> 1
TransitionGraph chain3();                        // a: 0 -> 1 -> 2, loop on 2

// Acceptor with `letters` letters from an explicit table.
AcceptorDfa make(std::size_t nodes, std::size_t letters, const std::vector<Node>& table, Node initial,
                 std::vector<Node> finals);

// Semigroups by Cayley rows.
FiniteSemigroup z2();
FiniteSemigroup trivial();
FiniteSemigroup semilattice2();  // {1, 0} under min; both generators
FiniteSemigroup null2();         // {x, 0}, every product 0

}  // namespace ltest::fixtures
