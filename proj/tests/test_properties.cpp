// Randomized and exhaustive property checks. Each property prints one line;
// the exit status is the number of failing properties.

#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "support.hpp"
#include "trigeom/constructions.hpp"
#include "trigeom/geomcheck.hpp"
#include "trigeom/multipoly.hpp"
#include "trigeom/poles.hpp"
#include "trigeom/skewlinalg.hpp"

using namespace trigeom;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3), F7 = FieldSpec::prime(7);

std::mt19937 rng(20261016);

struct Property {
  std::string name;
  long cases = 0;
  std::string failure;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failure.empty()) failure = what;
  }
};

int failures = 0;

void run(const std::string& name, const std::function<void(Property&)>& body) {
  Property p{name};
  try {
    body(p);
  } catch (const std::exception& e) {
    p.failure = std::string("exception: ") + e.what();
  }
  if (p.failure.empty()) {
    std::printf("ok    %-48s %ld cases\n", name.c_str(), p.cases);
  } else {
    std::printf("FAIL  %-48s %s\n", name.c_str(), p.failure.c_str());
    ++failures;
  }
}

Scalar random_scalar(const FieldSpec& f, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  if (f.is_rational()) {
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(f, mpq_class(d(rng), den(rng)));
  }
  return Scalar(f, static_cast<long long>(d(rng)));
}

MultiPoly random_poly(std::size_t nvars, const FieldSpec& f, int max_degree = 4, int terms = 4) {
  MultiPoly out(nvars, f);
  std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1), deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[static_cast<std::size_t>(var(rng))];
    out.add_term(e, random_scalar(f));
  }
  return out;
}

Vector random_vector(std::size_t n, const FieldSpec& f) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f));
  return v;
}

LinearMap random_gl(int n, const FieldSpec& f) {
  for (;;) {
    ScalarMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), f);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_scalar(f, 0, static_cast<int>(f.characteristic()) - 1);
    if (!determinant(m).is_zero()) return LinearMap(m);
  }
}

std::string name_of(const TriForm& h) { return h.label().value_or("form"); }

}  // namespace

int main() {
  run("field axioms over GF(p), p <= 7", [](Property& p) {
    for (std::uint64_t q : {2, 3, 5, 7}) {
      const FieldSpec f = FieldSpec::prime(q);
      for (long long a = 0; a < static_cast<long long>(q); ++a)
        for (long long b = 0; b < static_cast<long long>(q); ++b)
          for (long long c = 0; c < static_cast<long long>(q); ++c) {
            const Scalar x(f, a), y(f, b), z(f, c);
            p.require((x + y) + z == x + (y + z), "associativity");
            p.require(x * (y + z) == x * y + x * z, "distributivity");
            p.require(x.is_zero() || (x * x.inverse()).is_one(), "inverse");
          }
    }
  });

  run("polynomial ring axioms", [](Property& p) {
    for (const FieldSpec& f : {F3, F7, Q})
      for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const MultiPoly a = random_poly(n, f), b = random_poly(n, f), c = random_poly(n, f);
        p.require((a + b) + c == a + (b + c), "additive associativity");
        p.require(a + b == b + a, "additive commutativity");
        p.require((a * b) * c == a * (b * c), "multiplicative associativity");
        p.require(a * b == b * a, "multiplicative commutativity");
        p.require(a * (b + c) == a * b + a * c, "distributivity");
        p.require((a - a).is_zero(), "additive inverse");
      }
  });

  run("exact division round trip", [](Property& p) {
    for (const FieldSpec& f : {F7, Q})
      for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const MultiPoly a = random_poly(n, f, 3), b = random_poly(n, f, 3);
        if (b.is_zero()) continue;
        const auto q = exact_divide(a * b, b);
        p.require(q && *q == a, "exact_divide(a*b, b) != a");
      }
  });

  run("variable power stripping reconstructs the input", [](Property& p) {
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
      const MultiPoly a = random_poly(n, Q);
      if (a.is_zero()) continue;
      const std::size_t i = static_cast<std::size_t>(trial) % n;
      const StrippedPower s = strip_variable_power(a, i);
      MultiPoly power = MultiPoly::constant(n, Scalar::one(Q));
      for (unsigned k = 0; k < s.exponent; ++k) power *= MultiPoly::variable(n, Q, i);
      p.require(power * s.cofactor == a, "u^e * cofactor != input");
      p.require(!exact_divide(s.cofactor, MultiPoly::variable(n, Q, i)), "cofactor still divisible");
    }
  });

  run("evaluation is a ring homomorphism", [](Property& p) {
    for (const FieldSpec& f : {F7, Q})
      for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
        const MultiPoly a = random_poly(n, f), b = random_poly(n, f);
        const Vector x = random_vector(n, f);
        p.require((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x), "product");
        p.require((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x), "sum");
      }
  });

  run("Pf(M)^2 = det(M), sizes 2-6", [](Property& p) {
    for (const FieldSpec& f : {F7, Q})
      for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        ScalarMatrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_scalar(f);
            m(j, i) = -m(i, j);
          }
        const Scalar pf = pfaffian(m);
        p.require(pf * pf == determinant(m), "Pf^2 != det");
      }
  });

  run("kernel vectors annihilate the matrix", [](Property& p) {
    for (const FieldSpec& f : {F3, Q})
      for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + static_cast<std::size_t>(trial % 5), c = 1 + static_cast<std::size_t>(trial % 7);
        ScalarMatrix m(r, c, f);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, -1, 1);
        const RankKernel rk = rank_and_kernel(m);
        p.require(rk.rank + rk.kernel.size() == c, "rank-nullity");
        for (const auto& v : rk.kernel) p.require(is_zero_vector(m.apply(v)), "kernel vector");
      }
  });

  run("evaluate_form is multilinear and alternating", [](Property& p) {
    for (const FieldSpec& f : {F7, Q})
      for (const TriForm& h : {support::cat("T9", f), support::cat("T5", f), support::cat("T7", f)})
        for (int trial = 0; trial < 20; ++trial) {
          const Vector x = random_vector(7, f), x2 = random_vector(7, f), y = random_vector(7, f),
                       z = random_vector(7, f);
          const Scalar a = random_scalar(f);
          Vector mix(7, Scalar::zero(f));
          for (std::size_t i = 0; i < 7; ++i) mix[i] = a * x[i] + x2[i];
          p.require(evaluate_form(h, mix, y, z) == a * evaluate_form(h, x, y, z) + evaluate_form(h, x2, y, z),
                    "linearity");
          p.require(evaluate_form(h, x, x, z).is_zero(), "alternation");
          p.require(evaluate_form(h, x, y, z) == -evaluate_form(h, y, x, z), "antisymmetry");
          p.require(evaluate_form(h, x, y, z) == evaluate_form(h, y, z, x), "cyclic symmetry");
        }
  });

  run("rank is GL-invariant (50 elements per form)", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (const TriForm& h : support::catalog_over(f)) {
        const int r = radical_and_rank(h).rank;
        for (int trial = 0; trial < 50; ++trial)
          p.require(radical_and_rank(pullback(h, random_gl(7, f))).rank == r, name_of(h) + " rank changed");
      }
  });

  run("catalog ranks", [](Property& p) {
    for (const FieldSpec& f : {F2, F3, F7})
      for (const TriForm& h : support::catalog_over(f))
        p.require(radical_and_rank(h).rank == catalog_rank(parse_catalog_type(name_of(h))), name_of(h));
  });

  run("symbolic matrix agrees with contraction", [](Property& p) {
    for (const TriForm& h : support::catalog_over(F2)) {
      const PolyMatrix m = symbolic_matrix(h);
      const ProjectiveSpace space(7, 2);
      for (std::uint64_t i = 0; i < space.point_count(); ++i) {
        const Vector u = space.to_scalars(space.point(i));
        p.require(m.evaluate(u) == contraction_matrix(h, u), name_of(h) + " over GF(2)");
      }
    }
    for (CatalogType t : all_catalog_types()) {
      const TriForm h = catalog_terms(CatalogEntry(t, catalog_needs_parameter(t) ? std::optional(Scalar(Q, 3LL))
                                                                                 : std::nullopt),
                                      7, Q);
      const PolyMatrix m = symbolic_matrix(h);
      for (int trial = 0; trial < 100; ++trial) {
        const Vector u = random_vector(7, Q);
        p.require(m.evaluate(u) == contraction_matrix(h, u), catalog_name(t) + " over Q");
      }
    }
  });

  run("M_u: even rank, rank <= n-1, column i dependent", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (const TriForm& h : support::catalog_over(f)) {
        const ProjectiveSpace space(7, static_cast<std::uint32_t>(f.characteristic()));
        for (std::uint64_t idx = 0; idx < space.point_count(); ++idx) {
          const Vector u = space.to_scalars(space.point(idx));
          const ScalarMatrix m = contraction_matrix(h, u);
          const std::size_t r = rank(m);
          p.require(r % 2 == 0, name_of(h) + " odd rank");
          p.require(r <= 6, name_of(h) + " full rank");
          for (std::size_t i = 0; i < 7; ++i) {
            if (u[i].is_zero()) continue;
            std::vector<Vector> others, with;
            for (std::size_t j = 0; j < 7; ++j)
              if (j != i) others.push_back(m.column(j));
            with = others;
            with.push_back(m.column(i));
            p.require(row_space_basis(others, 7, f).size() == row_space_basis(with, 7, f).size(),
                      name_of(h) + " column not in span");
          }
        }
      }
  });

  run("degree parity, radical membership, pole iff covered", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (int n : {6, 7})
        for (const TriForm& h : support::catalog_over(f, n)) {
          const FpForm fp(h);
          const PoleReport report = enumerate_poles(h);
          for (const auto& rec : report.records) {
            p.require(rec.degree % 2 == (n - 1) % 2, name_of(h) + " parity");
            p.require(fp.space().in_span(fp.space().rref(rec.radical), rec.point), name_of(h) + " u not in Rad");
            p.require(static_cast<int>(rec.radical.size()) == rec.degree + 1, name_of(h) + " dim Rad");
            p.require((rec.degree >= 1) == !lines_through_point(fp, rec.point).empty(), name_of(h) + " covered");
          }
        }
  });

  run("pole variety equals the pole set (odd n)", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (const TriForm& h : support::catalog_over(f)) {
        const VarietyResult v = pole_variety(h);
        if (v.kind == VarietyKind::all_points) {
          const auto r = enumerate_poles(h);
          p.require(r.histogram.count(0) == 0, name_of(h) + " claimed all points");
          continue;
        }
        p.require(!variety_mismatch(h, *v.g), name_of(h) + " zero set differs");
      }
  });

  run("spread iff every pole has degree 1", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (int n : {6, 7})
        for (const TriForm& h : support::catalog_over(f, n)) {
          const IncidenceStructure g = build_geometry(h);
          const bool all_one = g.report.histogram.size() == 1 && g.report.histogram.count(1);
          p.require(spread_check(g).is_spread == all_one, name_of(h));
        }
  });

  run("every upper-radical line consists of poles", [](Property& p) {
    for (const FieldSpec& f : {F2, F3})
      for (const TriForm& h : support::catalog_over(f)) p.require(lines_are_poles_check(build_geometry(h)).pass, name_of(h));
  });

  run("serial and parallel builds agree", [](Property& p) {
    for (const TriForm& h : support::catalog_over(F3)) {
      EnumOptions many;
      many.threads = 3;
      const IncidenceStructure a = build_geometry(h), b = build_geometry(h, many);
      p.require(a.points == b.points && a.lines == b.lines, name_of(h));
    }
  });

  std::printf("%d failing properties\n", failures);
  return failures;
}
