#include <gtest/gtest.h>

#include "pfaflab/networks.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/theorems.hpp"

using namespace pfaflab;

namespace {

// Oracle: weighted path counts by DP over a topological order (x-coordinate).
std::vector<std::vector<Rational>> path_counts(const Network& net) {
  std::size_t nv = net.vertices().size();
  std::vector<int> order(nv);
  for (std::size_t v = 0; v < nv; ++v) order[v] = int(v);
  std::sort(order.begin(), order.end(),
            [&](int p, int q) { return net.vertices()[std::size_t(p)].pos.x < net.vertices()[std::size_t(q)].pos.x; });
  std::vector<std::vector<Rational>> out;
  for (int s : net.sources()) {
    std::vector<Rational> w(nv, 0);
    w[std::size_t(s)] = 1;
    for (int v : order)
      for (int e : net.out_edges(v)) {
        auto& edge = net.edges()[std::size_t(e)];
        w[std::size_t(edge.to)] += w[std::size_t(v)] * edge.weight.constant_value();
      }
    std::vector<Rational> row;
    for (int t : net.sinks()) row.push_back(w[std::size_t(t)]);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(Networks, PathWeightMatrixMatchesLindstromGesselViennot) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto net = random_grid(2, 3, seed);
    auto p = path_counts(net);
    auto a = path_weight_matrix(net);
    int m = int(net.sources().size());
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Rational want = 0;
        for (int k = 0; k < m; ++k)
          for (int l = k + 1; l < m; ++l) want += p[i][k] * p[j][l] - p[i][l] * p[j][k];
        EXPECT_EQ(a.entry(i + 1, j + 1).constant_value(), want) << "seed " << seed << " (" << i + 1 << "," << j + 1 << ")";
      }
  }
}

TEST(Networks, StembridgeAndPfaffinantEquality) {
  auto r = check_networks(2, 6, 3);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Networks, TypeOfDiagramNetwork) {
  auto r = check_network_type(3);
  EXPECT_TRUE(r.ok()) << r.to_json().dump();
}

TEST(Networks, JsonRoundTrip) {
  auto net = random_grid(2, 2, 11, true);
  auto back = Network::from_json(net.to_json());
  EXPECT_EQ(back.to_json(), net.to_json());
  EXPECT_EQ(path_weight_matrix(back).entry(1, 4), path_weight_matrix(net).entry(1, 4));
}

TEST(Networks, RejectsMalformedInput) {
  EXPECT_THROW(Network::from_json(nlohmann::json::parse(R"({"vertices": 3})")), InvalidNetwork);
  auto j = random_grid(1, 1, 0).to_json();
  j["sources"].push_back(j["sources"][0]);
  EXPECT_THROW(Network::from_json(j), InvalidNetwork);
  EXPECT_THROW(random_grid(1, 0, 0), InvalidNetwork);
}

TEST(Networks, SingleArcDiagramNetwork) {
  auto net = construct_network_of_diagram(SymTLDiagram::from_key(1, "V[(1,2)]"));
  EXPECT_EQ(net.edges().size(), 2u);
}
