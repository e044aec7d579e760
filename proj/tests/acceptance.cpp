// Acceptance gate: exercises every advertised guarantee end to end and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "dunkl/cli.hpp"
#include "dunkl/exact_linalg.hpp"
#include "dunkl/identities.hpp"

using namespace dunkl;

namespace {

int failures = 0;

Setup z2(std::vector<Scalar> kappas, int eps) {
    GroupSpec spec;
    spec.family = GroupSpec::Family::z2_power;
    spec.dim = static_cast<int>(kappas.size());
    spec.kappas = std::move(kappas);
    return make_setup(spec, eps);
}

Setup b2(Scalar axis, Scalar diagonal, int eps) {
    GroupSpec spec;
    spec.family = GroupSpec::Family::b2;
    spec.dim = 2;
    spec.kappas = {std::move(axis), std::move(diagonal)};
    return make_setup(spec, eps);
}

struct SuiteTally {
    int checks = 0;
    int failed = 0;
    std::string first_failure;

    void absorb(const std::vector<CheckResult>& results) {
        for (const auto& r : results) {
            ++checks;
            if (!r.pass) {
                ++failed;
                if (first_failure.empty()) first_failure = r.name + " -- " + r.detail;
            }
        }
    }
};

void report(int number, const std::string& what, bool ok, const std::string& detail,
            double seconds) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "  [" << seconds << "s]\n";
    if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, what, ok, detail, seconds);
}

}  // namespace

int main() {
    std::cout.precision(2);
    std::cout << std::fixed;

    criterion(1,
              "osp(1|2)/sl(2) suite exact on degree <= 5 for Z2^2, Z2^3, both eps",
              [](bool& ok) {
                  SuiteTally tally;
                  for (int eps : {-1, +1}) {
                      tally.absorb(run_suite(z2({Scalar(1, 2), Scalar(1, 3)}, eps), "osp12", 5));
                      tally.absorb(run_suite(
                          z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, eps), "osp12", 5));
                  }
                  ok = tally.failed == 0;
                  return ok ? std::to_string(tally.checks) + " identity checks"
                            : tally.first_failure;
              });

    criterion(2,
              "Laplace-side suite: maxgensymH, commm, maxDIH, mproj, theorem xu (|beta| <= 4)",
              [](bool& ok) {
                  SuiteTally tally;
                  tally.absorb(
                      run_suite(z2({Scalar(1, 2), Scalar(1, 3)}, -1), "laplace-symmetries", 4));
                  tally.absorb(run_suite(z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, -1),
                                         "laplace-symmetries", 4));
                  ok = tally.failed == 0;
                  return ok ? std::to_string(tally.checks) + " identity checks"
                            : tally.first_failure;
              });

    criterion(3,
              "Dirac-side suite: gensym, commZ, zotherversions, relofzandother, vectorzz, "
              "zkelv, I^2 = eps, zproj, zandproj; degrees <= 4, d <= 3, both eps",
              [](bool& ok) {
                  SuiteTally tally;
                  for (int eps : {-1, +1}) {
                      tally.absorb(run_suite(z2({Scalar(1, 2), Scalar(1, 3)}, eps),
                                             "dirac-symmetries", 4));
                      tally.absorb(run_suite(z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, eps),
                                             "dirac-symmetries", 4));
                  }
                  ok = tally.failed == 0;
                  return ok ? std::to_string(tally.checks) + " identity checks"
                            : tally.first_failure;
              });

    criterion(4,
              "maxwell basis sweep n = 0..5 on Z2^3, eps = -1: (n+1)*2 elements, full rank, "
              "D-kernel, rellindep, relalmostxu",
              [](bool& ok) {
                  const Setup s = z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, -1);
                  for (int n = 0; n <= 5; ++n) {
                      const BasisSet basis = maxwell_basis(s, n);  // construction certifies
                      if (static_cast<int>(basis.elements.size()) != 2 * (n + 1))
                          return std::string("wrong cardinality at n=") + std::to_string(n);
                      if (basis.rank != 2 * (n + 1) || !basis.kernel_certified)
                          return std::string("certificate failure at n=") + std::to_string(n);
                  }
                  // relation families, |eta| <= 4 resp. <= 3
                  for (int m = 0; m <= 4; ++m)
                      for (const auto& eta : monomials_of_degree(3, m))
                          for (int sv = 0; sv < s.spinor_dim(); ++sv) {
                              SpinorPoly lin(3, 2), quad(3, 2);
                              for (int j = 1; j <= 3; ++j) {
                                  const SpinorPoly ejs = mul_e(
                                      s, j, SpinorPoly::basis_spinor(3, 2, sv));
                                  for (int sw = 0; sw < 2; ++sw) {
                                      const Scalar c = ejs.comp(sw).coeff(MultiIndex(3));
                                      if (!c.is_zero())
                                          lin += z_monogenic(s, eta.plus_unit(j - 1), sw)
                                                     .scaled(c);
                                  }
                                  if (m <= 3) quad += z_monogenic(s, eta.plus_unit(j - 1, 2), sv);
                              }
                              if (!lin.is_zero())
                                  return std::string("rellindep fails at eta=") + eta.str();
                              if (m <= 3 && !quad.is_zero())
                                  return std::string("relalmostxu fails at eta=") + eta.str();
                          }
                  ok = true;
                  return std::string("12 basis sets certified, relations exact");
              });

    criterion(5,
              "section 5 suite on Z2^3, both eps: stepinduction (m<=6), z2propCK (j<=6), "
              "DDAonxunAn, inductionstepgen and zkpropCK (k=3), ck/partial-z bases (n<=4), "
              "maxwellandck (|j| <= 4)",
              [](bool& ok) {
                  SuiteTally tally;
                  int mismatched_constants = 0;
                  std::string mismatch_note;
                  for (int eps : {-1, +1}) {
                      const auto results = run_suite(
                          z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, eps),
                          "section5-constants", 4);
                      tally.absorb(results);
                      for (const auto& r : results)
                          if (r.detail.find("CONSTANT MISMATCH") != std::string::npos) {
                              ++mismatched_constants;
                              if (mismatch_note.empty()) mismatch_note = r.name + ": " + r.detail;
                          }
                  }
                  ok = tally.failed == 0;
                  if (!ok) return tally.first_failure;
                  std::string detail = std::to_string(tally.checks) + " checks";
                  detail += mismatched_constants == 0
                                ? ", every constant matches its closed formula"
                                : ", " + std::to_string(mismatched_constants) +
                                      " constant-formula discrepancies documented: " +
                                      mismatch_note;
                  return detail;
              });

    criterion(6, "Fischer decomposition for d = 2, 3, n <= 4, strictly positive kappa",
              [](bool& ok) {
                  const Setup s2 = z2({Scalar(1, 2), Scalar(1, 3)}, -1);
                  const Setup s3 = z2({Scalar(1, 2), Scalar(1, 3), Scalar(1, 4)}, -1);
                  for (int n = 0; n <= 4; ++n) {
                      const FischerReport r2 = fischer_check(s2, n);
                      if (!r2.ok) return "d=2: " + r2.detail;
                      const FischerReport r3 = fischer_check(s3, n);
                      if (!r3.ok) return "d=3: " + r3.detail;
                  }
                  ok = true;
                  return std::string("all ranks full");
              });

    criterion(7,
              "B2 over the sqrt(2)-extended field: Dunkl commutativity and osp(1|2) "
              "relations at degree <= 3",
              [](bool& ok) {
                  SuiteTally tally;
                  for (int eps : {-1, +1})
                      tally.absorb(run_suite(b2(Scalar(1, 2), Scalar(1, 2), eps), "osp12", 3));
                  ok = tally.failed == 0;
                  return ok ? std::to_string(tally.checks) + " identity checks"
                            : tally.first_failure;
              });

    criterion(8, "determinism: two cmd_basis runs with identical config are byte-identical",
              [](bool& ok) {
                  const std::vector<std::string> args = {
                      "basis", "--group", "z2^3", "--kappa", "1/2,1/3,1/4", "--eps",
                      "-1", "--degree", "3", "--kind", "maxwell", "--format", "json"};
                  std::ostringstream out1, out2, err;
                  const int code1 = run_cli(args, out1, err);
                  const int code2 = run_cli(args, out2, err);
                  ok = code1 == 0 && code2 == 0 && out1.str() == out2.str() &&
                       !out1.str().empty();
                  return ok ? std::to_string(out1.str().size()) + " identical bytes"
                            : std::string("outputs differ");
              });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criteria FAILED\n");
    return failures;
}
