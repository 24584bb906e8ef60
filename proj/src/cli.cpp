#include "tvprod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvprod/bounds.hpp"
#include "tvprod/error.hpp"
#include "tvprod/extremal.hpp"
#include "tvprod/reduce.hpp"
#include "tvprod/rng.hpp"
#include "tvprod/symmetrize.hpp"

namespace tvprod::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Domain error raised by the front end itself (bad --n-range and the like).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

Json array_of(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(number(v));
  return a;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InstanceError("cannot open instance file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<double> read_numbers(const Json& node, const std::string& field) {
  if (!node.is_array()) throw InstanceError("field '" + field + "': expected an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      throw InstanceError("field '" + field + "[" + std::to_string(i) + "]': expected a number");
    }
    out.push_back(node[i].get<double>());
  }
  return out;
}

ProbVector read_prob_vector(const Json& node, const std::string& field) {
  try {
    return ProbVector(read_numbers(node, field));
  } catch (const Error& e) {
    throw InstanceError("field '" + field + "': " + e.what());
  }
}

std::vector<FiniteDist> read_family(const Json& node, const std::string& field) {
  if (!node.is_array() || node.empty()) {
    throw InstanceError("field '" + field + "': expected a non-empty array of distributions");
  }
  std::vector<FiniteDist> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string name = field + "[" + std::to_string(i) + "]";
    try {
      out.emplace_back(read_numbers(node[i], name));
    } catch (const Error& e) {
      throw InstanceError("field '" + name + "' (coordinate " + std::to_string(i) + "): " + e.what());
    }
  }
  return out;
}

struct Flags {
  std::string input = "-";
  std::string format;
  bool exact = false;
  int budget = kDefaultLog2Budget;
  unsigned workers = 0;
  std::uint64_t samples = 100000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> n_values;
  std::string n_range;
  std::vector<double> weights;
  double threshold = 1.0;
  std::uint64_t random_instances = 0;
  std::size_t max_n = 14;

  EnumerationOptions enumeration() const { return {budget, workers}; }
};

// ---------------------------------------------------------------------------
// Text tables

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
}

std::string show(const std::optional<double>& v) { return v ? format_double(*v) : std::string("-"); }

std::string show_vector(std::span<const double> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += format_double(values[i]);
  }
  return s + "]";
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// Commands

std::optional<double> try_exact(const Instance& inst, const EnumerationOptions& opts, std::string& method) {
  if (inst.is_bernoulli()) {
    const auto& p = *inst.p;
    const auto& q = *inst.q;
    const bool constant = std::all_of(p.begin(), p.end(), [&](double v) { return v == p[0]; }) &&
                          std::all_of(q.begin(), q.end(), [&](double v) { return v == q[0]; });
    if (constant) {
      method = "equal_marginals";
      return exact_tv_equal_marginals(p.size(), p[0], q[0]);
    }
    method = "enumeration";
    return exact_tv_bernoulli(p, q, opts);
  }
  method = "enumeration";
  return exact_tv_general(inst.pair, opts);
}

int cmd_bounds(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = parse_instance(read_input(f.input, in));
  const BoundsReport r = bounds_report(inst.pair);

  std::optional<double> exact;
  std::string method;
  Json warnings = Json::array();
  if (f.exact) {
    try {
      exact = try_exact(inst, f.enumeration(), method);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget_exceeded) throw;
      warnings.push_back(Json{{"code", "budget_exceeded"}, {"message", e.what()}});
    }
  }

  if (f.format == "text") {
    std::vector<std::pair<std::string, std::string>> rows;
    if (inst.label) rows.emplace_back("label", *inst.label);
    rows.emplace_back("n", std::to_string(inst.pair.size()));
    rows.emplace_back("delta_l1", format_double(r.delta_l1));
    rows.emplace_back("delta_l2", format_double(r.delta_l2));
    rows.emplace_back("delta_linf", format_double(r.delta_linf));
    rows.emplace_back("lower_trivial", format_double(r.lower_trivial));
    rows.emplace_back("lower_l2", format_double(r.lower_l2));
    rows.emplace_back("lower_hellinger", format_double(r.lower_hellinger));
    rows.emplace_back("lower_kl", show(r.lower_kl));
    rows.emplace_back("upper_trivial", format_double(r.upper_trivial));
    rows.emplace_back("upper_hellinger", format_double(r.upper_hellinger));
    rows.emplace_back("upper_pinsker", format_double(r.upper_pinsker));
    rows.emplace_back("upper_symmetric", show(r.upper_symmetric));
    rows.emplace_back("upper_affinity", show(r.upper_affinity));
    rows.emplace_back("best_lower", format_double(r.best_lower));
    rows.emplace_back("best_upper", format_double(r.best_upper));
    rows.emplace_back("ratio", show(r.ratio));
    if (exact) rows.emplace_back("exact_tv", format_double(*exact));
    for (const auto& w : warnings) rows.emplace_back("warning", w["message"].get<std::string>());
    print_table(out, rows);
    return kExitOk;
  }

  Json j = envelope("bounds");
  j["label"] = inst.label ? Json(*inst.label) : Json(nullptr);
  j["shape"] = inst.is_bernoulli() ? "bernoulli" : "general";
  j["n"] = inst.pair.size();
  j["delta"] = {{"l1", number(r.delta_l1)}, {"l2", number(r.delta_l2)}, {"linf", number(r.delta_linf)}};
  j["divergences"] = {{"kl", number(r.kl_divergence)}, {"squared_hellinger", number(r.squared_hellinger)}};
  j["bounds"] = {
      {"lower_trivial", number(r.lower_trivial)},
      {"lower_l2", number(r.lower_l2)},
      {"lower_hellinger", number(r.lower_hellinger)},
      {"lower_kl", optional_number(r.lower_kl)},
      {"upper_trivial", number(r.upper_trivial)},
      {"upper_hellinger", number(r.upper_hellinger)},
      {"upper_pinsker", number(r.upper_pinsker)},
      {"upper_symmetric", optional_number(r.upper_symmetric)},
      {"upper_affinity", optional_number(r.upper_affinity)},
  };
  j["best_lower"] = number(r.best_lower);
  j["best_upper"] = number(r.best_upper);
  j["ratio"] = optional_number(r.ratio);
  if (f.exact) {
    j["exact_tv"] = optional_number(exact);
    j["exact_method"] = exact ? Json(method) : Json(nullptr);
  }
  j["warnings"] = warnings;
  emit_json(out, j);
  return kExitOk;
}

int cmd_exact(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = parse_instance(read_input(f.input, in));
  std::string method;
  const double tv = *try_exact(inst, f.enumeration(), method);
  if (f.format == "text") {
    print_table(out, {{"n", std::to_string(inst.pair.size())}, {"method", method}, {"exact_tv", format_double(tv)}});
    return kExitOk;
  }
  Json j = envelope("exact");
  j["label"] = inst.label ? Json(*inst.label) : Json(nullptr);
  j["n"] = inst.pair.size();
  j["method"] = method;
  j["exact_tv"] = number(tv);
  emit_json(out, j);
  return kExitOk;
}

const Instance& require_bernoulli(const Instance& inst, const std::string& command) {
  if (!inst.is_bernoulli()) throw InstanceError(command + " requires a Bernoulli instance {\"p\": ..., \"q\": ...}");
  return inst;
}

int cmd_mc(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = parse_instance(read_input(f.input, in));
  require_bernoulli(inst, "mc");
  const TVEstimate est = mc_tv_estimate(*inst.p, *inst.q, f.samples, f.confidence, f.seed, f.workers);
  if (f.format == "text") {
    out << format_double(est.value) << " +- " << format_double(est.half_width) << " (confidence "
        << format_double(est.confidence) << ", " << est.samples << " samples, seed " << f.seed << ")\n";
    return kExitOk;
  }
  Json j = envelope("mc");
  j["label"] = inst.label ? Json(*inst.label) : Json(nullptr);
  j["n"] = inst.pair.size();
  j["value"] = number(est.value);
  j["half_width"] = number(est.half_width);
  j["lower"] = number(est.lower());
  j["upper"] = number(est.upper());
  j["confidence"] = number(est.confidence);
  j["samples"] = est.samples;
  j["seed"] = f.seed;
  emit_json(out, j);
  return kExitOk;
}

int cmd_symmetrize(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = parse_instance(read_input(f.input, in));
  require_bernoulli(inst, "symmetrize");
  const ChannelProduct cp = apply_channel_product(*inst.p, *inst.q);
  if (f.format == "text") {
    print_table(out, {{"gamma_hat", show_vector(cp.pair.gamma_hat)},
                      {"p_hat", show_vector(cp.pair.p_hat.values())},
                      {"q_hat", show_vector(cp.pair.q_hat.values())}});
    for (std::size_t i = 0; i < cp.channels.size(); ++i) {
      const auto& m = cp.channels[i].rows;
      out << "channel[" << i << "]\n"
          << "  [" << format_double(m[0][0]) << ", " << format_double(m[0][1]) << "]\n"
          << "  [" << format_double(m[1][0]) << ", " << format_double(m[1][1]) << "]\n";
    }
    return kExitOk;
  }
  Json j = envelope("symmetrize");
  j["label"] = inst.label ? Json(*inst.label) : Json(nullptr);
  j["gamma_hat"] = array_of(cp.pair.gamma_hat);
  j["p_hat"] = array_of(cp.pair.p_hat.values());
  j["q_hat"] = array_of(cp.pair.q_hat.values());
  Json channels = Json::array();
  for (const auto& c : cp.channels) {
    channels.push_back(Json{array_of(c.rows[0]), array_of(c.rows[1])});
  }
  j["channels"] = channels;
  emit_json(out, j);
  return kExitOk;
}

int cmd_reduce(const Flags& f, std::istream& in, std::ostream& out) {
  const Instance inst = parse_instance(read_input(f.input, in));
  const ScheffeReduction red = scheffe_reduce(inst.pair);
  if (f.format == "text") {
    print_table(out, {{"p", show_vector(red.p.values())}, {"q", show_vector(red.q.values())}});
    for (std::size_t i = 0; i < red.witness_sets.size(); ++i) {
      out << "A[" << i << "] = {";
      for (std::size_t k = 0; k < red.witness_sets[i].size(); ++k) out << (k ? ", " : "") << red.witness_sets[i][k];
      out << "}\n";
    }
    return kExitOk;
  }
  Json j = envelope("reduce");
  j["label"] = inst.label ? Json(*inst.label) : Json(nullptr);
  j["p"] = array_of(red.p.values());
  j["q"] = array_of(red.q.values());
  j["witness_sets"] = red.witness_sets;
  emit_json(out, j);
  return kExitOk;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("invalid " + what + " '" + s + "'");
  return v;
}

// "start:stop" (step 1), "start:stop:step" or "start:stop:xfactor", inclusive.
std::vector<std::uint64_t> parse_n_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw DomainError("--n-range expects start:stop[:step|:xfactor]");
  const std::uint64_t start = parse_count(parts[0], "range start");
  const std::uint64_t stop = parse_count(parts[1], "range stop");
  if (start < 1 || stop < start) throw DomainError("--n-range requires 1 <= start <= stop");
  bool geometric = false;
  std::uint64_t step = 1;
  if (parts.size() == 3) {
    geometric = !parts[2].empty() && parts[2][0] == 'x';
    step = parse_count(geometric ? parts[2].substr(1) : parts[2], "range step");
    if (step < (geometric ? 2u : 1u)) throw DomainError("--n-range step must be >= 1 (factor >= 2)");
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = start; n <= stop;) {
    out.push_back(n);
    const std::uint64_t next = geometric ? n * step : n + step;
    if (next <= n) break;
    n = next;
  }
  return out;
}

std::vector<std::uint64_t> collect_n(const Flags& f) {
  std::vector<std::uint64_t> ns = f.n_values;
  if (!f.n_range.empty()) {
    const auto range = parse_n_range(f.n_range);
    ns.insert(ns.end(), range.begin(), range.end());
  }
  if (ns.empty()) throw DomainError("give --n or --n-range");
  for (auto n : ns) {
    if (n < 1) throw DomainError("n must be at least 1");
  }
  return ns;
}

void emit_rows(std::ostream& out, const std::string& command, const std::string& format,
               const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  if (format == "json") {
    Json j = envelope(command);
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json o;
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (c == 0) {
          o[header[c]] = static_cast<std::uint64_t>(row[c]);
        } else {
          o[header[c]] = number(row[c]);
        }
      }
      arr.push_back(o);
    }
    j["rows"] = arr;
    emit_json(out, j);
    return;
  }
  const char sep = format == "text" ? ' ' : ',';
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    line.push_back(std::to_string(static_cast<std::uint64_t>(row[0])));
    for (std::size_t c = 1; c < row.size(); ++c) line.push_back(format_double(row[c]));
    cells.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  if (format == "text") {
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
  }
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << sep;
      if (format == "text" && c + 1 < line.size()) {
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      } else {
        out << line[c];
      }
    }
    out << '\n';
  }
}

int cmd_gap(const Flags& f, std::ostream& out) {
  std::vector<std::vector<double>> rows;
  for (std::uint64_t n : collect_n(f)) {
    const double nd = static_cast<double>(n);
    const double tv = gap_tv_closed_form(n);
    const double upper = 1.0 / std::sqrt(nd);
    rows.push_back({nd, tv, upper, tv / upper, std::sqrt(nd)});
  }
  emit_rows(out, "gap", f.format.empty() ? "csv" : f.format,
            {"n", "tv_pq", "tv_pq_prime_upper", "ratio_lower", "sqrt_n"}, rows);
  return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  std::vector<std::vector<double>> rows;
  for (std::uint64_t n : collect_n(f)) {
    const double nd = static_cast<double>(n);
    const double gamma = 1.0 / nd;
    const double tv = exact_tv_equal_marginals(n, gamma, 0.0);
    const double tv_sym = exact_tv_equal_marginals(n, 0.5 + 0.5 * gamma, 0.5 - 0.5 * gamma);
    const double l2 = 1.0 / std::sqrt(nd);
    const double ratio = tv / tv_sym;
    rows.push_back({nd, tv, tv_sym, l2, TheoremOneConstants::c_final * std::min(1.0, l2), 1.0, ratio,
                    ratio / std::sqrt(nd)});
  }
  emit_rows(out, "sweep", f.format.empty() ? "csv" : f.format,
            {"n", "tv_pq", "tv_pq_prime", "upper_symmetric", "lower_l2", "upper_trivial", "ratio_exact",
             "ratio_over_sqrt_n"},
            rows);
  return kExitOk;
}

RademacherInstance random_rademacher(std::uint64_t seed, std::uint64_t index, std::size_t max_n) {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  const std::size_t n = 1 + static_cast<std::size_t>(rng.next() % max_n);
  std::vector<double> w(n);
  for (double& x : w) x = std::exp(3.0 * (rng.uniform() - 0.5));
  const double u = std::exp(6.0 * (rng.uniform() - 0.5));
  return RademacherInstance(std::move(w), u);
}

int cmd_lowther(const Flags& f, std::ostream& out) {
  if (f.random_instances > 0) {
    if (f.max_n < 1 || f.max_n > kMaxLowtherWeights) {
      throw DomainError("--max-n must lie in [1, " + std::to_string(kMaxLowtherWeights) + "]");
    }
    double worst = 0.0;
    std::uint64_t worst_index = 0, violations = 0;
    for (std::uint64_t i = 0; i < f.random_instances; ++i) {
      const LowtherResult r = lowther_check(random_rademacher(f.seed, i, f.max_n), f.workers);
      if (r.ratio > kLowtherConstant + 1e-9) ++violations;
      if (r.ratio > worst) {
        worst = r.ratio;
        worst_index = i;
      }
    }
    if (f.format == "text") {
      print_table(out, {{"instances", std::to_string(f.random_instances)},
                        {"max_ratio", format_double(worst)},
                        {"constant", format_double(kLowtherConstant)},
                        {"violations", std::to_string(violations)}});
      return kExitOk;
    }
    Json j = envelope("lowther");
    j["instances"] = f.random_instances;
    j["seed"] = f.seed;
    j["max_n"] = f.max_n;
    j["max_ratio"] = number(worst);
    j["max_ratio_instance"] = worst_index;
    j["constant"] = number(kLowtherConstant);
    j["violations"] = violations;
    emit_json(out, j);
    return kExitOk;
  }
  if (f.weights.empty()) throw DomainError("give --weights or --random");
  const RademacherInstance inst(f.weights, f.threshold);
  const LowtherResult r = lowther_check(inst, f.workers);
  if (f.format == "text") {
    print_table(out, {{"lhs", format_double(r.lhs)},
                      {"rhs", format_double(r.rhs)},
                      {"ratio", format_double(r.ratio)},
                      {"constant", format_double(kLowtherConstant)}});
    return kExitOk;
  }
  Json j = envelope("lowther");
  j["weights"] = array_of(inst.weights());
  j["threshold"] = number(inst.threshold());
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["ratio"] = number(r.ratio);
  j["constant"] = number(kLowtherConstant);
  j["within_constant"] = r.ratio <= kLowtherConstant + 1e-9;
  emit_json(out, j);
  return kExitOk;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InstanceError("JSON syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance must be a JSON object");

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw InstanceError("field 'label': expected a string");
    label = doc["label"].get<std::string>();
  }

  const bool bernoulli = doc.contains("p") || doc.contains("q");
  const bool general = doc.contains("P") || doc.contains("Q");
  if (bernoulli == general) {
    throw InstanceError("instance must contain exactly one of {\"p\", \"q\"} or {\"P\", \"Q\"}");
  }
  try {
    if (bernoulli) {
      if (!doc.contains("p") || !doc.contains("q")) throw InstanceError("fields 'p' and 'q' are both required");
      ProbVector p = read_prob_vector(doc["p"], "p");
      ProbVector q = read_prob_vector(doc["q"], "q");
      if (p.size() != q.size()) {
        throw InstanceError("fields 'p' and 'q': lengths " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()) + " differ");
      }
      FiniteProductPair pair = FiniteProductPair::from_bernoulli(p, q);
      return Instance{std::move(label), std::move(p), std::move(q), std::move(pair)};
    }
    if (!doc.contains("P") || !doc.contains("Q")) throw InstanceError("fields 'P' and 'Q' are both required");
    auto ps = read_family(doc["P"], "P");
    auto qs = read_family(doc["Q"], "Q");
    return Instance{std::move(label), std::nullopt, std::nullopt, FiniteProductPair(std::move(ps), std::move(qs))};
  } catch (const Error& e) {
    throw InstanceError(std::string("fields 'P' and 'Q': ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total variation distances between product measures: exact oracles, bounds and constructions",
               "tvprod"};
  app.require_subcommand(1);
  Flags f;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", f.input, "Instance JSON file, or - for stdin")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", f.workers, "Worker threads (0 = all cores); output does not depend on it");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", f.budget, "Enumeration budget as log2 of joint outcomes")
        ->check(CLI::Range(0, 62))
        ->capture_default_str();
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", f.n_values, "Dimension(s)")->delimiter(',');
    sub->add_option("--n-range", f.n_range, "start:stop[:step|:xfactor], inclusive");
  };

  auto* bounds = app.add_subcommand("bounds", "All analytic bounds for an instance");
  add_input(bounds);
  bounds->add_flag("--exact", f.exact, "Also compute the exact TV when within budget");
  add_budget(bounds);
  add_workers(bounds);
  add_format(bounds, {"json", "text"});

  auto* exact = app.add_subcommand("exact", "Exact TV by enumeration");
  add_input(exact);
  add_budget(exact);
  add_workers(exact);
  add_format(exact, {"json", "text"});

  auto* mc = app.add_subcommand("mc", "Monte Carlo TV estimate with a Hoeffding interval");
  add_input(mc);
  mc->add_option("--samples", f.samples, "Number of samples")->capture_default_str();
  mc->add_option("--confidence", f.confidence, "Interval confidence in (0,1)")->capture_default_str();
  mc->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
  add_workers(mc);
  add_format(mc, {"json", "text"});

  auto* sym = app.add_subcommand("symmetrize", "Symmetrized pair and per-coordinate channels");
  add_input(sym);
  add_format(sym, {"json", "text"});

  auto* reduce = app.add_subcommand("reduce", "Reduction of a general pair to a Bernoulli pair");
  add_input(reduce);
  add_format(reduce, {"json", "text"});

  auto* gap = app.add_subcommand("gap", "sqrt(n) gap construction, closed forms");
  add_n(gap);
  add_format(gap, {"csv", "json", "text"});

  auto* sweep = app.add_subcommand("sweep", "Exact gap ratios over a range of n");
  add_n(sweep);
  add_format(sweep, {"csv", "json", "text"});

  auto* lowther = app.add_subcommand("lowther", "Check E f(Z) <= c E f(Y) for f(t) = min{t, u}");
  lowther->add_option("--weights", f.weights, "Positive weights (normalized to unit l2 norm)")->delimiter(',');
  lowther->add_option("--threshold", f.threshold, "Threshold u of f(t) = min{t, u}")->capture_default_str();
  lowther->add_option("--random", f.random_instances, "Check this many random instances instead");
  lowther->add_option("--max-n", f.max_n, "Largest dimension for --random")->capture_default_str();
  lowther->add_option("--seed", f.seed, "RNG seed for --random")->capture_default_str();
  add_workers(lowther);
  add_format(lowther, {"json", "text"});

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("tvprod");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(f, in, out);
    if (exact->parsed()) return cmd_exact(f, in, out);
    if (mc->parsed()) return cmd_mc(f, in, out);
    if (sym->parsed()) return cmd_symmetrize(f, in, out);
    if (reduce->parsed()) return cmd_reduce(f, in, out);
    if (gap->parsed()) return cmd_gap(f, out);
    if (sweep->parsed()) return cmd_sweep(f, out);
    if (lowther->parsed()) return cmd_lowther(f, out);
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::budget_exceeded:
        return kExitBudget;
      case ErrorKind::dimension_mismatch:
        return kExitParse;
      case ErrorKind::invalid_argument:
        return kExitDomain;
    }
  }
  return kExitUsage;
}

}  // namespace tvprod::cli
