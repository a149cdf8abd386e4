#include "divsum/emit.hpp"

#include <charconv>

#include <json.hpp>

namespace divsum {

namespace {

using nlohmann::json;

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) line += ',';
    line += csv_field(fields[i]);
  }
  line += '\n';
  return line;
}

json json_optional_double(const std::optional<double>& v) {
  if (!v.has_value()) return nullptr;
  return *v;
}

json json_optional_unsigned(const std::optional<unsigned>& v) {
  if (!v.has_value()) return nullptr;
  return *v;
}

std::string divides_L_name(DividesL v) {
  switch (v) {
    case DividesL::yes: return "yes";
    case DividesL::no: return "no";
    case DividesL::not_applicable: return "not_applicable";
  }
  return "unknown";
}

}  // namespace

std::string csv_field(const std::string& value) {
  const bool needs_quotes =
      value.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string emit_orbit(const SigmaOrbit& orbit, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"k", "value", "value_mod_start"});
    for (const auto& e : orbit.entries) {
      out += csv_line({std::to_string(e.k), to_decimal(e.value),
                       to_decimal(e.value_mod_start)});
    }
    return out;
  }
  json doc;
  doc["start"] = to_decimal(orbit.start);
  doc["map"] = orbit_map_name(orbit.map_kind);
  doc["stop"] = orbit_stop_name(orbit.stop);
  doc["entries"] = json::array();
  for (const auto& e : orbit.entries) {
    doc["entries"].push_back({{"k", e.k},
                              {"value", to_decimal(e.value)},
                              {"value_mod_start",
                               to_decimal(e.value_mod_start)}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_gcd_chain(const GcdChain& chain, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"k", "m_k", "g_k"});
    for (const auto& term : chain.terms) {
      out += csv_line({std::to_string(term.k), to_decimal(term.m_k),
                       to_decimal(term.g_k)});
    }
    return out;
  }
  json doc;
  doc["m"] = to_decimal(chain.m);
  if (chain.g3_below_m.has_value()) {
    doc["g3_below_m"] = *chain.g3_below_m;
  } else {
    doc["g3_below_m"] = nullptr;
  }
  doc["terms"] = json::array();
  for (const auto& term : chain.terms) {
    doc["terms"].push_back({{"k", term.k},
                            {"m_k", to_decimal(term.m_k)},
                            {"g_k", to_decimal(term.g_k)}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_ctr_rows(const std::vector<CtrRow>& rows,
                          OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"m", "found_k", "stop"});
    for (const auto& row : rows) {
      out += csv_line(
          {to_decimal(row.m),
           row.found_k.has_value() ? std::to_string(*row.found_k) : "",
           row.found_k.has_value() ? "found" : orbit_stop_name(row.stop)});
    }
    return out;
  }
  json doc = json::array();
  for (const auto& row : rows) {
    doc.push_back(
        {{"m", to_decimal(row.m)},
         {"found_k", json_optional_unsigned(row.found_k)},
         {"stop",
          row.found_k.has_value() ? "found" : orbit_stop_name(row.stop)}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_period_report(const PeriodReport& report,
                               OutputFormat format) {
  const std::size_t shown = std::min<std::size_t>(
      report.residues.size(),
      report.L.fits_ulong_p() ? 2 * report.L.get_ui() : report.residues.size());
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"m", "mode", "L", "preperiod", "period",
                                "period_divides_L"});
    out += csv_line(
        {to_decimal(report.m),
         report.mode == PeriodMode::mod_m ? "mod_m" : "mod_sigma",
         to_decimal(report.L), std::to_string(report.preperiod),
         report.period.has_value() ? std::to_string(*report.period) : "",
         divides_L_name(report.period_divides_L)});
    return out;
  }
  json doc;
  doc["m"] = to_decimal(report.m);
  doc["mode"] = report.mode == PeriodMode::mod_m ? "mod_m" : "mod_sigma";
  doc["modulus"] = to_decimal(report.modulus);
  doc["L"] = to_decimal(report.L);
  doc["k_max"] = report.k_max;
  doc["preperiod"] = report.preperiod;
  doc["period"] = json_optional_unsigned(report.period);
  doc["period_divides_L"] = divides_L_name(report.period_divides_L);
  doc["residues"] = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    doc["residues"].push_back(to_decimal(report.residues[i]));
  }
  return doc.dump(2) + "\n";
}

std::string emit_multiperfect(const std::vector<MultiperfectHit>& hits,
                              OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"m", "ratio", "L", "L_is_prime"});
    for (const auto& hit : hits) {
      out += csv_line({std::to_string(hit.m), std::to_string(hit.ratio),
                       to_decimal(hit.L), hit.L_is_prime ? "true" : "false"});
    }
    return out;
  }
  json doc = json::array();
  for (const auto& hit : hits) {
    doc.push_back({{"m", std::to_string(hit.m)},
                   {"ratio", std::to_string(hit.ratio)},
                   {"L", to_decimal(hit.L)},
                   {"L_is_prime", hit.L_is_prime}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_density(const std::vector<DensityPoint>& points,
                         OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line(
        {"x", "deficient_fraction", "abundant_fraction", "perfect_count"});
    for (const auto& point : points) {
      out += csv_line({std::to_string(point.x),
                       format_double(point.deficient_fraction),
                       format_double(point.abundant_fraction),
                       std::to_string(point.perfect_count)});
    }
    return out;
  }
  json doc = json::array();
  for (const auto& point : points) {
    doc.push_back({{"x", point.x},
                   {"deficient_fraction", point.deficient_fraction},
                   {"abundant_fraction", point.abundant_fraction},
                   {"perfect_count", point.perfect_count}});
  }
  return doc.dump(2) + "\n";
}

std::string emit_robin_violators(const std::vector<std::uint64_t>& violators,
                                 OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"n"});
    for (std::uint64_t n : violators) out += csv_line({std::to_string(n)});
    return out;
  }
  json doc = json::array();
  for (std::uint64_t n : violators) doc.push_back(std::to_string(n));
  return doc.dump(2) + "\n";
}

std::string emit_robin_report(const RobinReport& report, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"n", "sigma", "strict_rhs",
                                "unconditional_rhs", "strict",
                                "unconditional"});
    out += csv_line({to_decimal(report.n), to_decimal(report.sigma),
                     format_double(report.strict_rhs),
                     format_double(report.unconditional_rhs),
                     bound_verdict_name(report.strict),
                     bound_verdict_name(report.unconditional)});
    return out;
  }
  json doc;
  doc["n"] = to_decimal(report.n);
  doc["sigma"] = to_decimal(report.sigma);
  doc["strict_rhs"] = report.strict_rhs;
  doc["unconditional_rhs"] = report.unconditional_rhs;
  doc["strict"] = bound_verdict_name(report.strict);
  doc["unconditional"] = bound_verdict_name(report.unconditional);
  return doc.dump(2) + "\n";
}

namespace {

std::vector<std::string> classification_fields(
    const ClassificationRecord& record) {
  return {to_decimal(record.n), to_decimal(record.sigma),
          number_class_name(record.cls),
          to_decimal(Natural(record.abundancy.get_num())) + "/" +
              to_decimal(Natural(record.abundancy.get_den()))};
}

json classification_json(const ClassificationRecord& record) {
  return {{"n", to_decimal(record.n)},
          {"sigma", to_decimal(record.sigma)},
          {"class", number_class_name(record.cls)},
          {"abundancy_num", to_decimal(Natural(record.abundancy.get_num()))},
          {"abundancy_den", to_decimal(Natural(record.abundancy.get_den()))}};
}

}  // namespace

std::string emit_classification(const ClassificationRecord& record,
                                OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"n", "sigma", "class", "abundancy"});
    out += csv_line(classification_fields(record));
    return out;
  }
  return classification_json(record).dump(2) + "\n";
}

std::string emit_classification_range(
    const std::vector<ClassificationRecord>& records, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"n", "sigma", "class", "abundancy"});
    for (const auto& record : records) {
      out += csv_line(classification_fields(record));
    }
    return out;
  }
  json doc = json::array();
  for (const auto& record : records) doc.push_back(classification_json(record));
  return doc.dump(2) + "\n";
}

std::string emit_stats_summary(const StatsSummary& summary,
                               OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"count", "mean", "variance", "skewness",
                                "excess_kurtosis", "ks_vs_normal",
                                "ks_vs_two_point", "fit_slope",
                                "fit_intercept"});
    auto opt = [](const std::optional<double>& v) {
      return v.has_value() ? format_double(*v) : std::string();
    };
    out += csv_line({std::to_string(summary.count),
                     format_double(summary.mean),
                     format_double(summary.variance), opt(summary.skewness),
                     opt(summary.excess_kurtosis), opt(summary.ks_vs_normal),
                     opt(summary.ks_vs_two_point),
                     format_double(summary.fit_slope),
                     format_double(summary.fit_intercept)});
    return out;
  }
  json doc;
  doc["count"] = summary.count;
  doc["mean"] = summary.mean;
  doc["variance"] = summary.variance;
  doc["skewness"] = json_optional_double(summary.skewness);
  doc["excess_kurtosis"] = json_optional_double(summary.excess_kurtosis);
  doc["ks_vs_normal"] = json_optional_double(summary.ks_vs_normal);
  doc["ks_vs_two_point"] = json_optional_double(summary.ks_vs_two_point);
  doc["fit_slope"] = summary.fit_slope;
  doc["fit_intercept"] = summary.fit_intercept;
  return doc.dump(2) + "\n";
}

std::string emit_pdf_params(const PdfParams& params, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"mu", "sigma"});
    out += csv_line({format_double(params.mu), format_double(params.sigma)});
    return out;
  }
  json doc;
  doc["mu"] = params.mu;
  doc["sigma"] = params.sigma;
  return doc.dump(2) + "\n";
}

std::string emit_congruence(const CongruenceCheck& check,
                            OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"r", "modulus", "lhs", "rhs", "match",
                                "divides", "biconditional_held"});
    out += csv_line({to_decimal(check.r), to_decimal(check.modulus),
                     to_decimal(check.lhs), to_decimal(check.rhs),
                     check.match ? "true" : "false",
                     check.divides ? "true" : "false",
                     check.biconditional_held ? "true" : "false"});
    return out;
  }
  json doc;
  doc["r"] = to_decimal(check.r);
  doc["modulus"] = to_decimal(check.modulus);
  doc["lhs"] = to_decimal(check.lhs);
  doc["rhs"] = to_decimal(check.rhs);
  doc["match"] = check.match;
  doc["divides"] = check.divides;
  doc["biconditional_held"] = check.biconditional_held;
  return doc.dump(2) + "\n";
}

std::string emit_divisibility(const Natural& m, unsigned long k,
                              const DivisibilityCheck& check,
                              OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"m", "k", "divides", "gcd_k_tau"});
    out += csv_line({to_decimal(m), std::to_string(k),
                     check.divides ? "true" : "false",
                     to_decimal(check.gcd_k_tau)});
    return out;
  }
  json doc;
  doc["m"] = to_decimal(m);
  doc["k"] = k;
  doc["divides"] = check.divides;
  doc["gcd_k_tau"] = to_decimal(check.gcd_k_tau);
  return doc.dump(2) + "\n";
}

std::string emit_factor_shape(const Natural& p, const Natural& L,
                              const FactorShapeReport& report,
                              OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"p", "L", "value", "q", "e", "q_mod_L",
                                "all_zero_or_one"});
    for (const auto& fr : report.factors) {
      out += csv_line({to_decimal(p), to_decimal(L), to_decimal(report.value),
                       to_decimal(fr.q), std::to_string(fr.e),
                       to_decimal(fr.residue),
                       report.all_zero_or_one ? "true" : "false"});
    }
    return out;
  }
  json doc;
  doc["p"] = to_decimal(p);
  doc["L"] = to_decimal(L);
  doc["value"] = to_decimal(report.value);
  doc["all_zero_or_one"] = report.all_zero_or_one;
  doc["factors"] = json::array();
  for (const auto& fr : report.factors) {
    doc["factors"].push_back({{"q", to_decimal(fr.q)},
                              {"e", fr.e},
                              {"q_mod_L", to_decimal(fr.residue)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace divsum
