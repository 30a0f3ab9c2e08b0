#include "kb/json_io.hpp"

#include <stdexcept>

namespace kb {

using nlohmann::json;

namespace {

std::string int_str(const Int& x) { return x.str(); }

json rational_to_json(const Rational& q) {
  return json::array({numerator(q).str(), denominator(q).str()});
}

Rational rational_from_json(const json& j) {
  return Rational(Int(j.at(0).get<std::string>()),
                  Int(j.at(1).get<std::string>()));
}

json float_rendering(const CycloElem& x) {
  auto z = embed_double(x);
  return json{{"re", z.real()}, {"im", z.imag()}, {"precision", "double"}};
}

std::string kind_str(OrderCertificate::Kind kind) {
  switch (kind) {
    case OrderCertificate::Kind::InfiniteOrder:
      return "infinite-order";
    case OrderCertificate::Kind::FiniteOrder:
      return "finite-order";
    case OrderCertificate::Kind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

OrderCertificate::Kind kind_from_str(const std::string& s) {
  if (s == "infinite-order") return OrderCertificate::Kind::InfiniteOrder;
  if (s == "finite-order") return OrderCertificate::Kind::FiniteOrder;
  if (s == "inconclusive") return OrderCertificate::Kind::Inconclusive;
  throw std::invalid_argument("unknown certificate kind: " + s);
}

std::string element_str(const RepElement& el) {
  switch (el.kind) {
    case RepElement::Kind::HalfTwistPow:
      return "half-twist-pow";
    case RepElement::Kind::Commutator2:
      return "commutator2";
    case RepElement::Kind::FullTwist:
      return "full-twist";
    case RepElement::Kind::SigmaN:
      return "sigma-n";
    case RepElement::Kind::CommutatorM:
      return "commutator-M";
    case RepElement::Kind::SeparatingTwistPow:
      return "separating-twist-pow";
  }
  return "?";
}

RepElement::Kind element_kind_from_str(const std::string& s) {
  if (s == "half-twist-pow") return RepElement::Kind::HalfTwistPow;
  if (s == "commutator2") return RepElement::Kind::Commutator2;
  if (s == "full-twist") return RepElement::Kind::FullTwist;
  if (s == "sigma-n") return RepElement::Kind::SigmaN;
  if (s == "commutator-M") return RepElement::Kind::CommutatorM;
  if (s == "separating-twist-pow") return RepElement::Kind::SeparatingTwistPow;
  throw std::invalid_argument("unknown element kind: " + s);
}

}  // namespace

json cyclo_to_json(const CycloElem& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_json(c));
  return json{{"modulus", x.modulus()},
              {"coeffs", coeffs},
              {"float", float_rendering(x)}};
}

CycloElem cyclo_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return CycloElem::from_coeffs(j.at("modulus").get<long>(),
                                std::move(coeffs));
}

json certificate_to_json(const OrderCertificate& cert) {
  json j{{"schema_version", kSchemaVersion},
         {"element", element_str(cert.element)},
         {"element_params",
          json::array({cert.element.param1, cert.element.param2})},
         {"element_display", cert.element.describe()},
         {"r", cert.r},
         {"t", cert.t},
         {"kind", kind_str(cert.kind)},
         {"rationale", cert.rationale}};
  if (cert.kind == OrderCertificate::Kind::InfiniteOrder) {
    j["witness_a"] = cert.witness_a;
    j["trace"] = cyclo_to_json(cert.trace);
    j["dim"] = int_str(cert.dim);
    j["det"] = cyclo_to_json(cert.det);
    j["sign_witness"] = cert.sign_witness;
    CycloElem excess =
        cert.trace -
        CycloElem::from_rational(cert.trace.modulus(), Rational(cert.dim));
    j["trace_excess_float"] = float_rendering(excess);
  }
  if (cert.kind == OrderCertificate::Kind::FiniteOrder) {
    j["order"] = cert.order;
    j["scalar"] = cyclo_to_json(cert.scalar);
  }
  return j;
}

OrderCertificate certificate_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version");
  OrderCertificate cert;
  cert.element.kind = element_kind_from_str(j.at("element").get<std::string>());
  cert.element.param1 = j.at("element_params").at(0).get<long>();
  cert.element.param2 = j.at("element_params").at(1).get<long>();
  cert.r = j.at("r").get<long>();
  cert.t = j.at("t").get<long>();
  cert.kind = kind_from_str(j.at("kind").get<std::string>());
  cert.rationale = j.value("rationale", "");
  if (cert.kind == OrderCertificate::Kind::InfiniteOrder) {
    cert.witness_a = j.at("witness_a").get<long>();
    cert.trace = cyclo_from_json(j.at("trace"));
    cert.dim = Int(j.at("dim").get<std::string>());
    cert.det = cyclo_from_json(j.at("det"));
    cert.sign_witness = j.at("sign_witness").get<int>();
  }
  if (cert.kind == OrderCertificate::Kind::FiniteOrder) {
    cert.order = j.at("order").get<long>();
    cert.scalar = cyclo_from_json(j.at("scalar"));
  }
  return cert;
}

bool reverify_certificate(const json& j) {
  OrderCertificate cert = certificate_from_json(j);
  if (cert.kind != OrderCertificate::Kind::InfiniteOrder)
    throw std::invalid_argument(
        "reverify_certificate: only infinite-order certificates carry "
        "self-contained evidence");
  RootChoice root(cert.r, cert.t);  // validates gcd(t, 4r) = 1
  const long N = root.modulus();
  if (cert.trace.modulus() != N || cert.det.modulus() != N) return false;
  if (!cert.det.is_one()) return false;
  if (conj_q(cert.trace) != cert.trace) return false;
  if (cert.dim <= 0) return false;
  CycloElem excess =
      cert.trace - CycloElem::from_rational(N, Rational(cert.dim));
  return sign_real(excess) == 1;
}

json count_profile_to_json(const CountProfile& counts) {
  auto level_map = [](const std::map<long, Int>& m) {
    json out = json::object();
    for (const auto& [level, count] : m)
      out[std::to_string(level)] = int_str(count);
    return out;
  };
  return json{{"schema_version", kSchemaVersion},
              {"n", counts.n},
              {"r", counts.r},
              {"k", int_str(counts.k)},
              {"k_prime", int_str(counts.k_prime)},
              {"total", int_str(counts.total)},
              {"k0", level_map(counts.k0)},
              {"k2", level_map(counts.k2)},
              {"l0", level_map(counts.l0)},
              {"l2", level_map(counts.l2)},
              {"k0_primed", level_map(counts.k0p)},
              {"k2_primed", level_map(counts.k2p)},
              {"l0_primed", level_map(counts.l0p)},
              {"l2_primed", level_map(counts.l2p)}};
}

}  // namespace kb
