#include <catch_amalgamated.hpp>
#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "ltest/bridge.hpp"
#include "ltest/graph_checks.hpp"
#include "ltest/semigroup_checks.hpp"

using namespace ltest;

namespace {

std::vector<AcceptorDfa> committed_corpus() {
  std::istringstream in(fixtures::read("calibration/corpus.txt"));
  std::vector<AcceptorDfa> out;
  std::string line, chunk;
  auto flush = [&] {
    auto f = parse_graph_file(chunk);
    out.push_back(make_acceptor(f.graph, f.initial.value(), f.finals.value()));
    chunk.clear();
  };
  while (std::getline(in, line)) {
    if (line == "---") {
      flush();
    } else {
      chunk += line + "\n";
    }
  }
  if (!chunk.empty()) flush();
  return out;
}

std::map<std::string, std::size_t> committed_result() {
  std::istringstream in(fixtures::read("calibration/result.txt"));
  std::map<std::string, std::size_t> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(' ');
    out[line.substr(0, cut)] = std::stoul(line.substr(cut + 1));
  }
  return out;
}

}  // namespace

TEST_CASE("committed calibration corpus is reduced and large enough", "[calibration]") {
  const auto corpus = committed_corpus();
  CHECK(corpus.size() >= 200);
  for (const auto& a : corpus) {
    CHECK(a.graph.node_count() <= 5);
    CHECK(minimize_dfa(a).graph == a.graph);
  }
}

TEST_CASE("side identities reproduce the committed calibration", "[calibration]") {
  const auto corpus = committed_corpus();
  const auto result = committed_result();
  std::size_t left_xy = 0, left_yx = 0, right_xy = 0, right_yx = 0, left_positive = 0, right_positive = 0;
  for (const auto& a : corpus) {
    const auto s = transition_semigroup(a.graph).semigroup;
    const bool left = check_left_lt_graph(a.graph).holds;
    const bool right = check_right_lt_graph(a.graph).holds;
    const bool xy = locally_idempotent_with(s, LocalIdentity::kXyxIsXy).holds;
    const bool yx = locally_idempotent_with(s, LocalIdentity::kXyxIsYx).holds;
    left_xy += left != xy;
    left_yx += left != yx;
    right_xy += right != xy;
    right_yx += right != yx;
    left_positive += left;
    right_positive += right;
  }
  CHECK(result.at("automata") == corpus.size());
  CHECK(result.at("left xyx=xy") == left_xy);
  CHECK(result.at("left xyx=yx") == left_yx);
  CHECK(result.at("right xyx=xy") == right_xy);
  CHECK(result.at("right xyx=yx") == right_yx);
  CHECK(result.at("left_positive") == left_positive);
  CHECK(result.at("right_positive") == right_positive);

  // The adopted assignment is exact and the swapped one is not.
  CHECK(left_yx == 0);
  CHECK(right_xy == 0);
  CHECK(left_xy > 0);
  CHECK(right_yx > 0);
  CHECK(kLeftLocalIdentity == LocalIdentity::kXyxIsYx);
  CHECK(kRightLocalIdentity == LocalIdentity::kXyxIsXy);
}
