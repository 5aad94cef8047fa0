#pragma once

// Regression snapshots: values produced by the fixed-seed corpora of the
// acceptance suite. A change here needs a reason.

namespace pzbench::selftest::snapshot {

// Maximum of the inverse-sqrt Zygmund ratio over the 200-polynomial corpus.
inline constexpr double kZygmundCorpusMax = 0.22401468786810186;

// Maximum Paley-probe ratio over the 100-signal real-line corpus.
inline constexpr double kRealLineProbeMax = 0.5310686661822881;

}  // namespace pzbench::selftest::snapshot
