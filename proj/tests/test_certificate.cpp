#include <gtest/gtest.h>

#include "negtype/certificate.hpp"
#include "negtype/families.hpp"
#include "negtype/transform.hpp"

using namespace negtype;

namespace {

std::vector<Point> all_vertices(const MetricGraph& g) {
  std::vector<Point> pts;
  for (const auto& v : g.vertices()) pts.push_back(Point::vertex(v));
  return pts;
}

std::vector<Point> witness_points(const Witness& w) {
  std::vector<Point> six(w.blue.begin(), w.blue.end());
  six.insert(six.end(), w.red.begin(), w.red.end());
  return six;
}

}  // namespace

TEST(Certificate, Witness) {
  const auto g = make_complete_bipartite(2, 3);
  Json cert = witness_certificate(construct_witness(g));
  EXPECT_TRUE(verify_certificate(cert, g).ok());
  cert["gap"] = "1/2";
  EXPECT_FALSE(verify_certificate(cert, g).ok());
}

TEST(Certificate, WitnessOmegaTampered) {
  const auto g = make_theta(1, 1, 1);
  Json cert = witness_certificate(construct_witness(g));
  cert["omega"][0]["weight"] = "1/7";
  EXPECT_FALSE(verify_certificate(cert, g).ok());
}

TEST(Certificate, WitnessAgainstWrongGraph) {
  const auto g = make_theta(1, 1, 1);
  const Json cert = witness_certificate(construct_witness(g));
  EXPECT_FALSE(verify_certificate(cert, make_theta(1, 1, 2)).ok());
}

TEST(Certificate, VertexWitness) {
  const auto s = subdivision_witness(make_theta(1, 1, 1), 180);
  Json cert = subdivision_certificate(s);
  EXPECT_TRUE(verify_certificate(cert, s.graph).ok());
  cert["points"][0] = {{"edge", s.graph.edge(0).id}, {"offset", "1/2"}};
  EXPECT_FALSE(verify_certificate(cert, s.graph).ok());
}

TEST(Certificate, NegativeTypeBothVerdicts) {
  const auto c = make_cycle(6);
  const auto pts = all_vertices(c);
  const auto m = distance_matrix(c, pts);
  Json yes = negtype_certificate(pts, m, is_negative_type(m));
  EXPECT_TRUE(verify_certificate(yes, c).ok());
  yes["transcript"][0]["value"] = "100";
  EXPECT_FALSE(verify_certificate(yes, c).ok());

  const auto g = make_theta(1, 1, 1);
  const auto w = construct_witness(g);
  const auto six = witness_points(w);
  std::vector<Point> distinct;
  for (const auto& p : six)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  const auto dm = distance_matrix(g, distinct);
  Json no = negtype_certificate(distinct, dm, is_negative_type(dm));
  EXPECT_FALSE(no.at("verdict").get<bool>());
  EXPECT_TRUE(verify_certificate(no, g).ok());
  no["gamma"] = "1";
  EXPECT_FALSE(verify_certificate(no, g).ok());
}

TEST(Certificate, L1BothVerdicts) {
  const auto c = make_cycle(5);
  const auto pts = all_vertices(c);
  const auto m = distance_matrix(c, pts);
  Json yes = l1_certificate(pts, m, is_l1_embeddable(m));
  EXPECT_TRUE(yes.at("verdict").get<bool>());
  EXPECT_TRUE(verify_certificate(yes, c).ok());
  yes["cuts"][0]["weight"] = "5";
  EXPECT_FALSE(verify_certificate(yes, c).ok());

  const auto k = make_complete_bipartite(2, 3);
  const auto kp = all_vertices(k);
  const auto km = distance_matrix(k, kp);
  Json no = l1_certificate(kp, km, is_l1_embeddable(km));
  EXPECT_FALSE(no.at("verdict").get<bool>());
  EXPECT_TRUE(verify_certificate(no, k).ok());
  for (auto& v : no["pair_weights"]) v = "1";
  EXPECT_FALSE(verify_certificate(no, k).ok());
}

TEST(Certificate, Gap) {
  const auto g = make_theta(1, 1, 1);
  const auto w = construct_witness(g);
  const auto ww = omega_from_witness(w);
  Json cert = gap_certificate(ww.points, ww.metric, gap_bracket(ww.metric));
  EXPECT_TRUE(verify_certificate(cert, g).ok());
  cert["lower"] = "1";
  EXPECT_FALSE(verify_certificate(cert, g).ok());

  const auto c = make_cycle(4);
  const auto pts = all_vertices(c);
  const auto m = distance_matrix(c, pts);
  const Json neg = gap_certificate(pts, m, gap_bracket(m));
  EXPECT_TRUE(verify_certificate(neg, c).ok());
}

TEST(Certificate, Theta) {
  const auto g = make_complete(4);
  Json cert = theta_certificate(minimal_theta(g));
  EXPECT_TRUE(verify_certificate(cert, g).ok());
  cert["total"] = "4";
  EXPECT_FALSE(verify_certificate(cert, g).ok());
  cert = theta_certificate(minimal_theta(g));
  cert["paths"][1] = cert["paths"][0];
  EXPECT_FALSE(verify_certificate(cert, g).ok());
}

TEST(Certificate, MalformedInput) {
  const auto g = make_theta(1, 1, 1);
  EXPECT_THROW(verify_certificate(Json::object(), g), InputError);
  EXPECT_THROW(verify_certificate(Json{{"kind", "mystery"}, {"points", Json::array()}}, g), InputError);
  Json cert = witness_certificate(construct_witness(g));
  cert["blue"] = Json::array({0, 1});
  EXPECT_THROW(verify_certificate(cert, g), InputError);
}
