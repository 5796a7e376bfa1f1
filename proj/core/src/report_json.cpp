#include "gft/report_json.hpp"

#include "gft/errors.hpp"

#include <cmath>
#include <cstdio>

namespace gft {

namespace {

void write_string(std::string& out, const std::string& s) {
  // nlohmann's escaping, applied to a lone string
  out += Json(s).dump();
}

void write_double(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  const std::string_view text(buf);
  out += text;
  // keep it a JSON float so the type survives a round trip
  if (text.find_first_of(".e") == std::string_view::npos) {
    out += ".0";
  }
}

void write(std::string& out, const Json& j) {
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) { // std::map: sorted keys
      if (!first) {
        out += ',';
      }
      first = false;
      write_string(out, key);
      out += ':';
      write(out, value);
    }
    out += '}';
    break;
  }
  case Json::value_t::array: {
    out += '[';
    bool first = true;
    for (const auto& value : j) {
      if (!first) {
        out += ',';
      }
      first = false;
      write(out, value);
    }
    out += ']';
    break;
  }
  case Json::value_t::number_float:
    write_double(out, j.get<double>());
    break;
  case Json::value_t::string:
    write_string(out, j.get<std::string>());
    break;
  default:
    out += j.dump();
    break;
  }
}

Json optional_number(const std::optional<double>& x) {
  return x ? number_or_null(*x) : Json(nullptr);
}

} // namespace

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json to_json(const CoefficientSeq& f) {
  Json coeffs = Json::array();
  if (f.is_negative()) {
    for (double b : f.magnitudes()) {
      coeffs.push_back(b);
    }
  } else {
    for (const auto& a : f.coefficients()) {
      coeffs.push_back(Json::array({a.real(), a.imag()}));
    }
  }
  return {
      {"convention", f.is_negative() ? "negative" : "general"},
      {"m", optional_number(f.m())},
      {"N", f.truncation_order()},
      {"coefficients", std::move(coeffs)},
      {"tail_bound", f.tail_bound()},
  };
}

Json to_json(const MembershipReport& r) {
  return {
      {"predicate", r.predicate},
      {"verdict", std::string(to_string(r.verdict))},
      {"lhs", number_or_null(r.lhs)},
      {"rhs", number_or_null(r.rhs)},
      {"margin", number_or_null(r.margin)},
      {"residual", optional_number(r.crosscheck_residual)},
      {"N", r.truncation_order ? Json(*r.truncation_order) : Json(nullptr)},
  };
}

Json to_json(const GridReport& r) {
  return {
      {"condition", std::string(to_string(r.condition))},
      {"max", number_or_null(r.max_value)},
      {"argmax", Json::array({r.argmax.real(), r.argmax.imag()})},
      {"violations", r.violations},
      {"skipped", r.skipped},
  };
}

Json to_json(const ThresholdResult& r) {
  Json j{{"predicate", std::string(to_string(r.predicate))},
         {"evals", r.evaluations}};
  if (const auto* fin = std::get_if<FiniteThreshold>(&r.outcome)) {
    j["outcome"] = "finite";
    j["m_star"] = fin->m_star;
    j["bracket"] = fin->bracket_width;
  } else {
    j["outcome"] = "always_holds";
    j["m_star"] = nullptr;
    j["bracket"] = nullptr;
  }
  return j;
}

CoefficientSeq coefficient_seq_from_json(const Json& j) {
  try {
    const auto convention = j.at("convention").get<std::string>();
    const double tail = j.at("tail_bound").get<double>();
    std::optional<double> m;
    if (!j.at("m").is_null()) {
      m = j.at("m").get<double>();
    }
    const auto& coeffs = j.at("coefficients");
    if (convention == "negative") {
      return CoefficientSeq::negative(coeffs.get<std::vector<double>>(), tail, m);
    }
    if (convention == "general") {
      std::vector<Complex> a;
      for (const auto& c : coeffs) {
        if (c.is_array() && c.size() == 2) {
          a.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else {
          a.emplace_back(c.get<double>(), 0.0);
        }
      }
      return CoefficientSeq::general(std::move(a), tail, m);
    }
    throw DomainError("unknown convention '" + convention + "'");
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed coefficient sequence: ") + e.what());
  }
}

std::string canonical_dump(const Json& j) {
  std::string out;
  write(out, j);
  return out;
}

} // namespace gft
