#include "pcw/report.hpp"

#include <cmath>
#include <cstdio>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_value(const Report& v, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Report(key).dump() + ": ";
        write_value(val, out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        write_value(item, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        throw std::logic_error(
            "non-finite number in report; use report_number()");
      }
      out += format_double(d);
      return;
    }
    default:
      // integers, strings, booleans, null: the default dump is canonical
      out += v.dump();
      return;
  }
}

}  // namespace

std::string serialize_report(const Report& doc) {
  std::string out;
  write_value(doc, out, 0);
  out += "\n";
  return out;
}

Report parse_report(const std::string& text) {
  try {
    return Report::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

Report report_number(double v) {
  if (std::isinf(v) && v > 0) return Report("infinite");
  if (!std::isfinite(v)) throw std::logic_error("NaN has no report encoding");
  return Report(v);
}

Report report_from_fraction_matrix(const FractionMatrix& F) {
  Report rows = Report::array();
  for (int i = 0; i < F.n; ++i) {
    Report row = Report::array();
    for (Symbol k = 0; k < F.q; ++k) row.push_back(F.at(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Report report_from_spectral(const SpectralBoundReport& r) {
  Report doc;
  doc["bound"] = report_number(r.bound);
  doc["c"] = r.c;
  doc["d"] = r.d;
  doc["kappa"] = report_number(r.kappa_used);
  doc["kappa_generic"] = report_number(r.kappa_generic_value);
  doc["lambda1"] = report_number(r.lambda1);
  doc["lambda1_cd_gap"] = report_number(r.lambda1_cd_gap);
  doc["lambda2"] = report_number(r.lambda2);
  doc["n"] = r.n;
  doc["q"] = r.q;
  doc["vacuous"] = r.vacuous;
  return doc;
}

Report report_from_lp(const LpBoundReport& r) {
  Report doc;
  doc["bound"] = report_number(r.bound);
  doc["bound_generic"] = report_number(r.bound_generic);
  doc["iterations"] = r.solution.iterations;
  doc["kappa"] = report_number(r.kappa_used);
  doc["kappa_generic"] = report_number(r.kappa_generic_value);
  doc["n"] = r.n;
  doc["optimum"] = report_number(r.optimum);
  doc["q"] = r.q;
  return doc;
}

namespace {

Report report_from_counter(const CheckCounter& c) {
  Report doc;
  doc["evaluated"] = c.evaluated;
  doc["violations"] = c.violations;
  return doc;
}

}  // namespace

Report report_from_verification(const VerificationReport& vr) {
  Report doc;

  Report code;
  code["connected"] = vr.connected;
  code["m"] = vr.m;
  code["n"] = vr.n;
  code["q"] = vr.q;
  code["regular"] = vr.reg.has_value();
  if (vr.reg) {
    code["c"] = vr.reg->first;
    code["d"] = vr.reg->second;
  }
  doc["code"] = std::move(code);

  Report config;
  config["M_values"] = vr.M_values;
  config["covers_per_M"] = vr.covers_per_M;
  config["enumeration_limit"] = report_number(vr.limit);
  config["seed"] = vr.seed;
  doc["config"] = std::move(config);

  Report covers = Report::array();
  for (const CoverRecord& r : vr.covers) {
    Report rec;
    rec["M"] = r.M;
    rec["pseudocodewords"] = r.pseudocodewords;
    rec["seed"] = r.seed;
    covers.push_back(std::move(rec));
  }
  doc["covers"] = std::move(covers);
  doc["pseudocodewords_examined"] = vr.pseudocodewords_examined;

  Report emp;
  emp["d_squared"] = report_number(vr.empirical_min_d2);
  emp["label"] = "sampled minimum";
  if (std::isfinite(vr.empirical_min_d2)) {
    emp["witness"] = report_from_fraction_matrix(vr.witness);
  }
  doc["empirical_minimum"] = std::move(emp);

  Report checks;
  checks["closed_form_lower"] = report_from_counter(vr.closed_form);
  checks["count_inequalities"] = report_from_counter(vr.count_ineq);
  checks["per_check_quadratic"] = report_from_counter(vr.per_check_quad);
  checks["rank_one_lp"] = report_from_counter(vr.rank_one_lp);
  checks["support_energy_lower"] = report_from_counter(vr.energy_lower);
  checks["support_energy_upper"] = report_from_counter(vr.energy_upper);
  doc["checks"] = std::move(checks);

  Report bounds;
  Report spectral;
  spectral["applicable"] = vr.spectral.has_value();
  if (vr.spectral) {
    spectral.update(report_from_spectral(*vr.spectral));
    spectral["sound"] = vr.spectral_sound;
    spectral["gap"] = report_number(vr.spectral_gap);
  } else {
    spectral["note"] = vr.spectral_note;
  }
  bounds["spectral"] = std::move(spectral);

  Report lp;
  lp["applicable"] = vr.lp.has_value();
  if (vr.lp) {
    lp.update(report_from_lp(*vr.lp));
    lp["sound"] = vr.lp_sound;
    lp["gap"] = report_number(vr.lp_gap);
  } else {
    lp["note"] = vr.lp_note;
  }
  bounds["lp"] = std::move(lp);
  doc["bounds"] = std::move(bounds);

  return doc;
}

}  // namespace pcw
