#pragma once

#include <iosfwd>
#include <string>

#include "minkpair/oracle.hpp"

namespace minkpair {

enum class Backend { Approx, Exact };

std::string backend_label(Backend backend);
Backend parse_backend(const std::string& name);

// A metric pair as read from JSON. Entries may be numbers or "p/q" strings;
// every entry is kept as a double, and the exact view is available only when
// all entries were integers or rational strings (a non-integral bare number
// has no declared exact value).
struct PairDocument {
    MetricPair<double> approx;
    std::optional<MetricPair<Rational>> exact;
};

PairDocument parse_pair_document(const std::string& text);
PairDocument load_pair_document(std::istream& in);

// 2x2 matrix (not necessarily symmetric), e.g. a transition to verify.
Transition<double> parse_transition_document(const std::string& text);

// The fields of an emitted report that `verify` needs back.
struct ReportData {
    std::string cls;
    bool indeterminate = false;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<Transition<double>> s_total;
    std::optional<double> residual_g;
    std::optional<double> residual_gcheck;
};

ReportData parse_report(const std::string& text);

// Serialization primitives shared by the CLI emitters. Doubles use 17
// significant digits (lossless round trip) with -0 normalized to 0, so equal
// inputs produce byte-identical documents.
std::string json_double(double x);
std::string json_escape(const std::string& s);

std::string pair_json(const MetricPair<double>& pair);
std::string pair_json(const MetricPair<Rational>& pair);

}  // namespace minkpair
