// Python surface over the core library: big integers cross the boundary as
// native Python ints (decimal-string bridge), reports as plain dicts/lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecvet/curvefile.hpp"
#include "ecvet/ecdsa.hpp"
#include "ecvet/generate.hpp"
#include "ecvet/registry.hpp"
#include "ecvet/rholab.hpp"
#include "ecvet/verify.hpp"

namespace py = pybind11;
using namespace ecvet;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
 public:
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

DomainParams domain_from_file(const CurveFile& f) {
  if (!f.N || !f.n || !f.h)
    throw std::invalid_argument(f.name + ": curve has no declared orders");
  return DomainParams{CurveParams(PrimeModulus::checked(f.p), f.a, f.b),
                      Point::affine(f.Gx, f.Gy), *f.N, *f.n, *f.h};
}

py::dict report_dict(const VerificationOutcome& outcome) {
  py::list checks;
  for (const auto& c : outcome.report.checks) {
    py::dict row;
    row["id"] = c.id;
    row["status"] = check_status_name(c.status);
    row["detail"] = c.detail;
    checks.append(row);
  }
  const DerivedQuantities& d = outcome.report.derived;
  py::dict derived;
  derived["trace"] = d.t;
  derived["rho_log2"] = d.rho_log2;
  if (d.k) {
    derived["embedding_exact"] = d.k->exact;
    derived["embedding_value"] = d.k->value;
  }
  if (d.cm.D) derived["cm_discriminant"] = *d.cm.D;
  if (d.twist_N != 0) {
    derived["twist_order"] = d.twist_N;
    derived["twist_trace"] = d.twist_t;
    if (d.twist_n) derived["twist_subgroup_order"] = *d.twist_n;
    if (d.twist_h) derived["twist_cofactor"] = *d.twist_h;
    derived["twist_rho_log2"] = d.twist_rho_log2;
    derived["joint_rho_log2"] = d.joint_rho_log2;
  }
  py::dict out;
  out["checks"] = checks;
  out["derived"] = derived;
  out["exit_code"] = outcome.exit_code;
  out["verdict"] = outcome.verdict;
  return out;
}

SecurityThresholds thresholds_for(const std::string& profile, int bits) {
  if (profile == "desk") return SecurityThresholds::desk(bits);
  return SecurityThresholds::production_verifier();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Short Weierstrass curve generation, validation, and audit";

  m.def("is_probable_prime",
        [](const Int& n) { return is_probable_prime(n); },
        py::arg("n"));

  m.def("naf_weight", &naf_weight, py::arg("n"));
  m.def("rho_cost_log2", &rho_cost_log2, py::arg("n"));
  m.def("parallel_rho_cost_log2", &parallel_rho_cost_log2, py::arg("n"),
        py::arg("processors"));

  m.def(
      "curve_order",
      [](const Int& p, const Int& a, const Int& b, const std::string& engine) {
        CurveParams curve(PrimeModulus::checked(p), a, b);
        if (engine == "exhaustive") return count_points_exhaustive(curve);
        if (engine == "bsgs") return count_points_bsgs(curve);
        throw std::invalid_argument("curve_order: engine must be exhaustive or bsgs");
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("engine") = "bsgs");

  m.def(
      "twist_order",
      [](const Int& p, const Int& N) {
        return twist_order(PrimeModulus::checked(p), N);
      },
      py::arg("p"), py::arg("N"));

  m.def(
      "scalar_mul",
      [](const Int& p, const Int& a, const Int& b, const Int& k, const Int& x,
         const Int& y) -> py::object {
        CurveParams curve(PrimeModulus::checked(p), a, b);
        Point R = scalar_mul(curve, k, Point::affine(x, y));
        if (R.is_infinity()) return py::none();
        return py::make_tuple(R.x, R.y);
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("k"), py::arg("x"),
      py::arg("y"));

  m.def(
      "generate",
      [](int bits, const std::string& seed, const std::string& profile) {
        GeneratorConfig cfg;
        cfg.bits = bits;
        cfg.thresholds = profile == "desk"
                             ? SecurityThresholds::desk(bits, true)
                             : SecurityThresholds::production_generator();
        cfg.order_engine =
            bits < 20 ? OrderEngine::Exhaustive : OrderEngine::Bsgs;
        TestEntropySource rng(seed);
        cfg.rng = &rng;
        GenerateResult res = generate(cfg);
        CurveFile f;
        f.name = "py" + std::to_string(bits);
        f.p = res.domain.curve.p.value;
        f.a = res.domain.curve.a;
        f.b = res.domain.curve.b;
        f.N = res.domain.N;
        f.n = res.domain.n;
        f.h = res.domain.h;
        f.Gx = res.domain.G.x;
        f.Gy = res.domain.G.y;
        f.twist_N = twist_order(res.domain.curve.p, res.domain.N);
        f.seed = res.seed;
        py::dict out;
        out["p"] = f.p;
        out["a"] = f.a;
        out["b"] = f.b;
        out["N"] = *f.N;
        out["n"] = *f.n;
        out["h"] = *f.h;
        out["Gx"] = f.Gx;
        out["Gy"] = f.Gy;
        out["twist_N"] = *f.twist_N;
        out["text"] = serialize_curve_file(f);
        return out;
      },
      py::arg("bits") = 40, py::arg("seed") = "python",
      py::arg("profile") = "desk");

  m.def(
      "verify_text",
      [](const std::string& text, const std::string& profile) {
        CurveFile f = parse_curve_file(text);
        VerificationOutcome outcome =
            run_verification(f, thresholds_for(profile, bit_length(f.p)), {});
        return report_dict(outcome);
      },
      py::arg("text"), py::arg("profile") = "production");

  m.def(
      "audit_text",
      [](const std::string& text, const std::string& profile) {
        CurveFile f = parse_curve_file(text);
        VerificationOutcome outcome =
            run_verification(f, thresholds_for(profile, bit_length(f.p)), {});
        py::list rows;
        for (const auto& r : full_audit(outcome)) {
          py::dict row;
          row["criterion"] = r.criterion;
          row["status"] = check_status_name(r.status);
          row["evidence"] = r.evidence;
          rows.append(row);
        }
        return rows;
      },
      py::arg("text"), py::arg("profile") = "production");

  m.def("registry_names", &registry_names);
  m.def(
      "registry_show",
      [](const std::string& name) {
        return serialize_curve_file(registry_get(name).file);
      },
      py::arg("name"));

  m.def(
      "solve_ecdlp",
      [](const std::string& text, const Int& qx, const Int& qy,
         std::uint64_t seed) {
        CurveFile f = parse_curve_file(text);
        DomainParams domain = domain_from_file(f);
        return solve_ecdlp(domain, Point::affine(qx, qy), seed).k_recovered;
      },
      py::arg("text"), py::arg("qx"), py::arg("qy"), py::arg("seed") = 1);

  m.def(
      "ecdsa_roundtrip",
      [](const std::string& text, const Int& digest, const std::string& seed) {
        CurveFile f = parse_curve_file(text);
        DomainParams domain = domain_from_file(f);
        TestEntropySource rng(seed);
        KeyPair kp = keygen(domain, rng);
        Signature sig = sign(domain, kp.d, digest, rng);
        py::dict out;
        out["r"] = sig.r;
        out["s"] = sig.s;
        out["ok"] = verify(domain, kp.P_pub, digest, sig);
        return out;
      },
      py::arg("text"), py::arg("digest"), py::arg("seed") = "python-ecdsa");
}
