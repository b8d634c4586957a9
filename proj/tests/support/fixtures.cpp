#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ltest::fixtures {

std::string path(const std::string& name) { return std::string(LTEST_FIXTURES) + "/" + name; }

std::string read(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TransitionGraph graph(const std::string& name) { return parse_graph(read(name)); }

AcceptorDfa acceptor(const std::string& name) {
  auto f = parse_graph_file(read(name));
  return make_acceptor(f.graph, f.initial.value(), f.finals.value());
}

FiniteSemigroup semigroup(const std::string& name) { return parse_semigroup(read(name)); }

TransitionGraph loop(std::size_t letters) {
  TransitionGraph g(1, letters);
  for (Letter a = 0; a < letters; ++a) g.set(0, a, 0);
  return g;
}

TransitionGraph z2_swap() { return parse_graph("graph 2 2\n1 0\n0 1\n"); }
TransitionGraph reset2() { return parse_graph("graph 2 2\n0 1\n0 1\n"); }
TransitionGraph chain3() { return parse_graph("graph 3 1\n1\n2\n2\n"); }

AcceptorDfa make(std::size_t nodes, std::size_t letters, const std::vector<Node>& table, Node initial,
                 std::vector<Node> finals) {
  TransitionGraph g(nodes, letters);
  for (Node p = 0; p < nodes; ++p)
    for (Letter a = 0; a < letters; ++a) g.set(p, a, table[p * letters + a]);
  return make_acceptor(std::move(g), initial, std::move(finals));
}

FiniteSemigroup z2() { return FiniteSemigroup::from_cayley(2, 1, {1, 0}); }
FiniteSemigroup trivial() { return FiniteSemigroup::from_cayley(1, 1, {0}); }
FiniteSemigroup semilattice2() { return FiniteSemigroup::from_cayley(2, 2, {0, 1, 1, 1}); }
FiniteSemigroup null2() { return FiniteSemigroup::from_cayley(2, 1, {1, 1}); }

}  // namespace ltest::fixtures
