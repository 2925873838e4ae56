#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "aalpha/errors.hpp"
#include "aalpha/json_io.hpp"
#include "aalpha/verify.hpp"

using namespace aalpha;

TEST_CASE("alpha parsing") {
  CHECK(parse_alpha("1/4").exact == Rational(1, 4));
  CHECK(parse_alpha("1").exact == Rational(1));
  CHECK_FALSE(parse_alpha("0.25").exact);
  CHECK(parse_alpha("0.25").value == 0.25);
  CHECK(parse_alpha("0.3").text() == "0.3");
  CHECK_THROWS_AS(parse_alpha("3/2"), DomainError);
  CHECK_THROWS_AS(parse_alpha("-0.1"), DomainError);
  CHECK_THROWS_AS(parse_alpha("0.5x"), DomainError);
  CHECK(parse_alpha_grid("0,1/2,0.75").size() == 3);
  CHECK(parse_alpha_grid("").empty());
  const auto grid = default_alpha_grid();
  REQUIRE(grid.size() == 5);
  for (const auto& a : grid) CHECK(a.exact);
}

TEST_CASE("sweep") {
  const std::vector<CatalogEntry> catalog = {CatalogEntry::central(generate(Family::complete, {4})),
                                             CatalogEntry::central(generate(Family::complete, {2})),
                                             CatalogEntry::cvjoin(generate(Family::cycle, {4}), generate(Family::complete, {2})),
                                             CatalogEntry::kpq(generate(Family::petersen), 2, 3)};
  const auto report = sweep(catalog, default_alpha_grid(), SweepOptions{3});
  CHECK(report.cases.size() == 20);
  const auto s = report.summary();
  CHECK(s.passed == 15);
  CHECK(s.skipped == 5);
  CHECK(s.failed == 0);
  CHECK(report.ok());
  for (const auto& c : report.cases) {
    if (c.status == CaseStatus::skipped) CHECK(c.notes.find("r < 2") != std::string::npos);
    else CHECK(c.deviation <= 1e-8);
  }
  CHECK(sweep(catalog, {}).cases.empty());
}

TEST_CASE("catalog parsing") {
  const auto cat = parse_catalog("# comment\ncentral petersen\n\ncvjoin cycle:4 complete:3  # trailing\nkpq cycle:5 2 3\n");
  REQUIRE(cat.size() == 3);
  CHECK(cat[0].kind == CatalogEntry::Kind::central);
  CHECK(cat[1].label() == "C4 cvj K3");
  CHECK(cat[2].kind == CatalogEntry::Kind::cvjoin_kpq);
  CHECK(cat[2].q == 3);
  CHECK_THROWS_AS(parse_catalog("join petersen"), ParseError);
  CHECK_THROWS_AS(parse_catalog("kpq petersen 2"), ParseError);
  CHECK(graph_from_spec("complete_bipartite:2,3").size() == 6);
}

TEST_CASE("spectra equality") {
  const auto s = eigenvalues_sym(adjacency_sym<double>(generate(Family::petersen)));
  CHECK(spectra_equal(s, s, 0.0));
  const auto shri = eigenvalues_sym(adjacency_sym<double>(generate(Family::shrikhande)));
  const auto rook = eigenvalues_sym(adjacency_sym<double>(generate(Family::rook4x4)));
  CHECK(spectra_equal(shri, rook, 1e-8));
  const auto k4 = eigenvalues_sym(adjacency_sym<double>(generate(Family::complete, {4})));
  const auto c4 = eigenvalues_sym(adjacency_sym<double>(generate(Family::cycle, {4})));
  CHECK_FALSE(spectra_equal(k4, c4, 1e-8));
  CHECK_FALSE(spectra_equal(k4, s, 1e-8));
}

TEST_CASE("cospectral join family") {
  const Graph shri = generate(Family::shrikhande), rook = generate(Family::rook4x4);
  const auto report =
      cospectral_cvjoin_family(shri, rook, generate(Family::path, {3}), parse_alpha_grid("0,1/4,1/2,3/4,1"));
  CHECK(report.cases.size() == 5);
  CHECK(report.ok());
  for (const auto& c : report.cases) {
    CHECK(c.status == CaseStatus::pass);
    CHECK(c.notes.find("exact: identical") != std::string::npos);
    CHECK(c.notes.find("non-isomorphic") != std::string::npos);
  }
  CHECK_THROWS_AS(cospectral_cvjoin_family(generate(Family::complete, {4}), generate(Family::cycle, {4}),
                                           generate(Family::path, {3}), default_alpha_grid()),
                  PreconditionError);
  CHECK_THROWS_AS(cospectral_cvjoin_family(generate(Family::complete_bipartite, {2, 3}), rook,
                                           generate(Family::path, {3}), default_alpha_grid()),
                  PreconditionError);
}

TEST_CASE("coronal equality") {
  const Graph pet = generate(Family::petersen);
  CHECK(coronal_equal_check(pet, pet, 0.3, {4.0, 5.5}));
  // pentagonal prism: 3-regular on 10 vertices, so both coronals are 10 / (x - r)
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i + 5, (i + 1) % 5 + 5);
    e.emplace_back(i, i + 5);
  }
  const Graph prism(10, e);
  for (double a : {0.0, 0.5, 0.9})
    CHECK(coronal_equal_check(pet, prism, a, coronal_sample_points(a_alpha_matrix(pet, a))));
  CHECK_FALSE(coronal_equal_check(generate(Family::complete, {4}), generate(Family::complete_bipartite, {1, 3}), 0.0,
                                  {5.0, 7.0}));
  CHECK_THROWS_AS(coronal_equal_check(pet, pet, 0.0, {3.0, 1.0}), SingularityError);
  const auto samples = coronal_sample_points(adjacency_sym<double>(pet));
  CHECK(samples.size() == 21);
}

TEST_CASE("discrepancy ledger") {
  const auto entries = analyze_discrepancies();
  auto find = [&](const std::string& id) -> const DiscrepancyEntry* {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  };
  const auto* pair = find("central-Kn-pair");
  REQUIRE(pair);
  CHECK_FALSE(pair->consistent);
  CHECK(pair->finding.find("K_3, alpha=1") != std::string::npos);
  const auto* weight = find("cvjoin-coronal-weight");
  REQUIRE(weight);
  CHECK_FALSE(weight->consistent);
  const auto* general = find("central-general-pair");
  REQUIRE(general);
  CHECK(general->consistent);
  const auto* kpq = find("cvjoin-kpq-final-equation");
  REQUIRE(kpq);
  CHECK(kpq->finding.find("degree 4") != std::string::npos);
}

TEST_CASE("report serialization") {
  auto report = sweep({CatalogEntry::central(generate(Family::cycle, {5}))}, parse_alpha_grid("0,0.5"));
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["cases"].size() == 2);
  CHECK(j["summary"]["passed"] == 2);
  const std::string csv = to_csv(report);
  CHECK(csv.rfind("label,source,alpha,order,status,deviation,notes", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const auto q = nlohmann::json::parse(to_json(PolyQ{Rational(-1, 2), 0, 1}));
  CHECK(q.dump().find("\"-1/2\"") != std::string::npos);
}
