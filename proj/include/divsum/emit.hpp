#ifndef DIVSUM_EMIT_HPP_
#define DIVSUM_EMIT_HPP_

#include <string>
#include <vector>

#include "divsum/classify.hpp"
#include "divsum/dynamics.hpp"
#include "divsum/periodicity.hpp"
#include "divsum/stats.hpp"

namespace divsum {

enum class OutputFormat { csv, json };

/// RFC 4180 quoting: fields containing commas, quotes or newlines are quoted,
/// embedded quotes doubled.
std::string csv_field(const std::string& value);

/// Shortest round-trip decimal rendering of a double (never scientific-free
/// guarantees -- std::to_chars picks the shortest exact form).
std::string format_double(double value);

// Emitters return the full artifact as a string so identical inputs always
// produce identical bytes, whatever thread count computed them.

std::string emit_orbit(const SigmaOrbit& orbit, OutputFormat format);
std::string emit_gcd_chain(const GcdChain& chain, OutputFormat format);

std::string emit_ctr_rows(const std::vector<CtrRow>& rows,
                          OutputFormat format);

std::string emit_period_report(const PeriodReport& report,
                               OutputFormat format);
std::string emit_multiperfect(const std::vector<MultiperfectHit>& hits,
                              OutputFormat format);
std::string emit_density(const std::vector<DensityPoint>& points,
                         OutputFormat format);
std::string emit_robin_violators(const std::vector<std::uint64_t>& violators,
                                 OutputFormat format);
std::string emit_robin_report(const RobinReport& report, OutputFormat format);
std::string emit_classification(const ClassificationRecord& record,
                                OutputFormat format);
std::string emit_classification_range(
    const std::vector<ClassificationRecord>& records, OutputFormat format);
std::string emit_stats_summary(const StatsSummary& summary,
                               OutputFormat format);
std::string emit_pdf_params(const PdfParams& params, OutputFormat format);
std::string emit_congruence(const CongruenceCheck& check, OutputFormat format);
std::string emit_divisibility(const Natural& m, unsigned long k,
                              const DivisibilityCheck& check,
                              OutputFormat format);
std::string emit_factor_shape(const Natural& p, const Natural& L,
                              const FactorShapeReport& report,
                              OutputFormat format);

}  // namespace divsum

#endif  // DIVSUM_EMIT_HPP_
