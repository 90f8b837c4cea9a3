#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <variant>

#include "etacalc/geometry.hpp"

using namespace etacalc;

TEST_CASE("circle bundle end derived quantities") {
  CircleBundleEnd end{2, 3, Rational(1, 4)};
  CHECK(end.chi() == -2);
  CHECK(end.sign_l() == 1);
  CHECK(end.epsilon() == 1);
  CircleBundleEnd neg{0, -5, std::nullopt};
  CHECK(neg.chi() == 2);
  CHECK(neg.sign_l() == -1);
  CHECK(neg.epsilon() == 0);
}

TEST_CASE("end validation") {
  CHECK_NOTHROW(CircleBundleEnd{1, 2, Rational(1, 3)}.validate());
  CHECK_NOTHROW(CircleBundleEnd{0, -1, std::nullopt}.validate());
  CHECK_THROWS_AS((CircleBundleEnd{1, 0, std::nullopt}.validate()),
                  TrivialBundle);
  CHECK_THROWS_AS((CircleBundleEnd{-1, 2, std::nullopt}.validate()),
                  SchemaError);
  CHECK_THROWS_AS((CircleBundleEnd{1, 2, Rational(0)}.validate()),
                  SchemaError);
  CHECK_THROWS_AS((CircleBundleEnd{1, 2, Rational(-1, 2)}.validate()),
                  SchemaError);
}

TEST_CASE("coupled line bookkeeping") {
  CoupledLine a = validate_coupled(-1, 1);
  CHECK(a.h_L() == 0);
  CoupledLine b = validate_coupled(2, 3);
  CHECK(b.h_L() == 5);
  CHECK(b.h_L() - b.h_L_star == b.deg);
  CHECK_THROWS_AS(validate_coupled(-1, 0), RiemannRochViolation);
  CHECK_THROWS_AS(validate_coupled(2, -1), RiemannRochViolation);
}

TEST_CASE("irreducible asymptote validation") {
  MonopoleIrreducible ok{{2, 3, std::nullopt}, {-1, 1}};
  CHECK_NOTHROW(ok.validate());

  MonopoleIrreducible wrong_sign{{2, 3, std::nullopt}, {1, 1}};
  CHECK_THROWS_AS(wrong_sign.validate(), UnsupportedSign);

  MonopoleIrreducible rr{{2, 3, std::nullopt}, {-3, 1}};  // h_L = -2
  CHECK_THROWS_AS(rr.validate(), RiemannRochViolation);

  MonopoleIrreducible clifford{{2, 3, std::nullopt}, {-1, 3}};  // h* > g
  CHECK_THROWS_AS(clifford.validate(), CliffordViolation);

  MonopoleIrreducible trivial{{2, 0, std::nullopt}, {-1, 1}};
  CHECK_THROWS_AS(trivial.validate(), TrivialBundle);
}

TEST_CASE("reducible asymptote rejects the degenerate residue case") {
  MonopoleReducible ok{{2, 3, std::nullopt}, 1};  // g-1 = 1, |l| = 3
  CHECK_NOTHROW(ok.validate());
  MonopoleReducible deg1{{1, 5, std::nullopt}, 2};  // g-1 = 0 divisible
  CHECK_THROWS_AS(deg1.validate(), DegenerateReducible);
  MonopoleReducible deg2{{3, 2, std::nullopt}, 0};  // g-1 = 2, |l| = 2
  CHECK_THROWS_AS(deg2.validate(), DegenerateReducible);
  MonopoleReducible deg3{{2, -1, std::nullopt}, 4};  // mod 1 always 0
  CHECK_THROWS_AS(deg3.validate(), DegenerateReducible);
}

TEST_CASE("manifold validation requires ends") {
  FourManifoldData man;
  man.c2_integral = Rational(0);
  CHECK_THROWS_AS(man.validate(), SchemaError);
  man.ends.emplace_back(MonopoleIrreducible{{2, 3, std::nullopt}, {-1, 1}});
  CHECK_NOTHROW(man.validate());
}

TEST_CASE("residue reduction") {
  CHECK(reduce_residue(7, 3) == std::pair<long long, long long>{1, 2});
  CHECK(reduce_residue(0, -5) == std::pair<long long, long long>{0, 0});
  CHECK(reduce_residue(-2, 3) == std::pair<long long, long long>{1, -1});
  CHECK(reduce_residue(-7, -3) == std::pair<long long, long long>{2, -3});
  CHECK(reduce_residue(6, 3) == std::pair<long long, long long>{0, 2});
  CHECK_THROWS_AS(reduce_residue(1, 0), TrivialBundle);
}

TEST_CASE("residue reduction round-trips on a randomized sweep") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> ks(-500, 500);
  std::uniform_int_distribution<long long> ls(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    long long l = ls(rng);
    if (l == 0) continue;
    long long k = ks(rng);
    auto [canon, shift] = reduce_residue(k, l);
    long long abs_l = l < 0 ? -l : l;
    CHECK(0 <= canon);
    CHECK(canon < abs_l);
    CHECK(canon + shift * abs_l == k);
  }
}

TEST_CASE("moduli dimension formula and gates") {
  CHECK(moduli_dim(3, -1) == 2);
  CHECK(moduli_dim(1, -1) == -2);
  CHECK(moduli_dim(2, -2) == -2);
  CHECK_THROWS_AS(moduli_dim(2, 0), UnsupportedSign);
  CHECK_THROWS_AS(moduli_dim(2, 1), UnsupportedSign);
  CHECK_THROWS_AS(moduli_dim(0, -1), InvalidModuli);
  // The two printed forms agree for n < 0: 2(g-1+n) = 2(g-1-|n|).
  for (long long g = 1; g <= 6; ++g)
    for (long long n = -4; n < 0; ++n)
      CHECK(moduli_dim(g, n) == 2 * (g - 1 - (-n)));
}

TEST_CASE("manifest parsing extracts every field") {
  const char* text = R"({
    "manifold": {"chi": 2, "sign": -1, "c2": "7/3"},
    "ends": [
      {"genus": 2, "degree": 3, "rho": "1/4",
       "asymptote": {"type": "irreducible", "n": -1, "h_star": 1}},
      {"genus": 2, "degree": -3, "rho": "symbolic",
       "asymptote": {"type": "reducible", "kappa": 2}},
      {"genus": 3, "degree": 4,
       "asymptote": {"type": "irreducible", "n": -2, "h_star": 2}}
    ]
  })";
  FourManifoldData man = parse_manifest(text);
  CHECK(man.chi_hat == 2);
  CHECK(man.sign_hat == -1);
  CHECK(man.c2_integral == Rational(7, 3));
  REQUIRE(man.ends.size() == 3);

  const auto& irr = std::get<MonopoleIrreducible>(man.ends[0]);
  CHECK(irr.end.genus == 2);
  CHECK(irr.end.degree == 3);
  REQUIRE(irr.end.radius_sq.has_value());
  CHECK(*irr.end.radius_sq == Rational(1, 4));
  CHECK(irr.line.deg == -1);
  CHECK(irr.line.h_L_star == 1);

  const auto& red = std::get<MonopoleReducible>(man.ends[1]);
  CHECK(red.kappa == 2);
  CHECK_FALSE(red.end.radius_sq.has_value());
  CHECK_FALSE(asymptote_end(man.ends[2]).radius_sq.has_value());
}

TEST_CASE("manifests accept integer c2 and rho") {
  const char* text = R"({
    "manifold": {"chi": 0, "sign": 0, "c2": 4},
    "ends": [{"genus": 1, "degree": 2, "rho": 1,
              "asymptote": {"type": "irreducible", "n": -1, "h_star": 1}}]
  })";
  FourManifoldData man = parse_manifest(text);
  CHECK(man.c2_integral == Rational(4));
  CHECK(*asymptote_end(man.ends[0]).radius_sq == Rational(1));
}

TEST_CASE("schema violations are named") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(parse_manifest(text), SchemaError);
  };
  bad("not json at all");
  bad("[1, 2]");
  bad(R"({"ends": []})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0}})");
  bad(R"({"manifold": {"sign": 0, "c2": 0}, "ends": []})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0}, "ends": []})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0},
          "ends": [{"degree": 2,
                    "asymptote": {"type": "irreducible", "n": -1,
                                  "h_star": 0}}]})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0},
          "ends": [{"genus": 1, "degree": 2}]})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0},
          "ends": [{"genus": 1, "degree": 2,
                    "asymptote": {"type": "exotic"}}]})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0},
          "ends": [{"genus": 1, "degree": 2,
                    "asymptote": {"type": "irreducible", "h_star": 0}}]})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": 0},
          "ends": [{"genus": 1, "degree": 2,
                    "asymptote": {"type": "reducible"}}]})");
  bad(R"({"manifold": {"chi": 0.5, "sign": 0, "c2": 0}, "ends": []})");
  bad(R"({"manifold": {"chi": 0, "sign": 0, "c2": "x"},
          "ends": [{"genus": 1, "degree": 2,
                    "asymptote": {"type": "reducible", "kappa": 1}}]})");
}

TEST_CASE("validation errors surface through parsing") {
  CHECK_THROWS_AS(parse_manifest(R"({
    "manifold": {"chi": 0, "sign": 0, "c2": 0},
    "ends": [{"genus": 1, "degree": 0,
              "asymptote": {"type": "irreducible", "n": -1, "h_star": 1}}]
  })"),
                  TrivialBundle);
  CHECK_THROWS_AS(parse_manifest(R"({
    "manifold": {"chi": 0, "sign": 0, "c2": 0},
    "ends": [{"genus": 2, "degree": 3,
              "asymptote": {"type": "irreducible", "n": -3, "h_star": 1}}]
  })"),
                  RiemannRochViolation);
  CHECK_THROWS_AS(parse_manifest(R"({
    "manifold": {"chi": 0, "sign": 0, "c2": 0},
    "ends": [{"genus": 2, "degree": 3,
              "asymptote": {"type": "irreducible", "n": -1, "h_star": 3}}]
  })"),
                  CliffordViolation);
  CHECK_THROWS_AS(parse_manifest(R"({
    "manifold": {"chi": 0, "sign": 0, "c2": 0},
    "ends": [{"genus": 3, "degree": 2,
              "asymptote": {"type": "reducible", "kappa": 1}}]
  })"),
                  DegenerateReducible);
}

TEST_CASE("error kinds prefix the message") {
  try {
    validate_coupled(-1, 0);
    FAIL("expected a RiemannRochViolation");
  } catch (const RiemannRochViolation& e) {
    CHECK(std::string(e.what()).rfind("RiemannRochViolation: ", 0) == 0);
    CHECK(e.kind() == "RiemannRochViolation");
  }
}
