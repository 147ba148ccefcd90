// lintree: reproduce k-linear tree counts, the linear/nonlinear census,
// brute-force verification and the asymptotic constants from the command line.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lintree/lintree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::size_t maxN = 25;
  std::vector<std::size_t> ns;
  std::size_t oracleLimit = lintree::kDefaultOracleLimit;
  unsigned precision = lintree::kDefaultPrecision;
  std::string format = "csv";
  std::string out;
  unsigned jobs = 1;
  bool longForm = false;
  std::string nonlinearOut;

  void validate() const {
    if (precision < lintree::kMinPrecision) throw UsageError("--precision must be >= 15");
    if (oracleLimit > lintree::kOracleHardCap)
      throw UsageError("--oracle-limit must be <= " + std::to_string(lintree::kOracleHardCap));
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
    if (maxN < 1) throw UsageError("--max-n must be >= 1");
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
  }
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }
  void finish() {
    stream().flush();
    if (file_ && !*file_) throw UsageError("write failed for '" + path_ + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

int cmd_table(const RunConfig& cfg) {
  const auto table = lintree::klinear_table(cfg.maxN);
  Sink sink(cfg.out);
  if (cfg.format == "json")
    sink.stream() << lintree::report::table_json(table).dump(2) << '\n';
  else if (cfg.longForm)
    lintree::report::write_table_long_csv(sink.stream(), table);
  else
    lintree::report::write_table_csv(sink.stream(), table);
  sink.finish();
  return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
  const auto table = lintree::klinear_table(cfg.maxN);
  const auto trees = lintree::free_tree_counts(cfg.maxN);
  std::vector<lintree::TreeCensus> rows;
  for (std::size_t n = lintree::report::first_row(cfg.maxN); n <= cfg.maxN; ++n)
    rows.push_back(lintree::census(table, trees, n));
  Sink sink(cfg.out);
  if (cfg.format == "json")
    sink.stream() << lintree::report::census_json(rows).dump(2) << '\n';
  else
    lintree::report::write_census_csv(sink.stream(), rows);
  sink.finish();
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::size_t> ns = cfg.ns;
  if (ns.empty())
    for (std::size_t n = 1; n <= cfg.maxN; ++n) ns.push_back(n);
  std::size_t top = 1;
  for (auto n : ns) top = std::max(top, n);
  if (top > cfg.oracleLimit)
    throw UsageError("n=" + std::to_string(top) + " exceeds the oracle limit " + std::to_string(cfg.oracleLimit) +
                     " (raise with --oracle-limit, at most " + std::to_string(lintree::kOracleHardCap) + ")");

  const auto table = lintree::klinear_table(top);
  const auto trees = lintree::free_tree_counts(top);
  std::vector<std::string> nonlinearTrees;
  lintree::OracleOptions opts;
  opts.limit = cfg.oracleLimit;
  opts.jobs = cfg.jobs;
  if (!cfg.nonlinearOut.empty()) opts.nonlinearEdgeLists = &nonlinearTrees;

  Sink sink(cfg.out);
  auto& os = sink.stream();
  bool allOk = true;
  for (auto n : ns) {
    const auto oc = lintree::oracle_census(n, opts);
    std::vector<std::string> problems;
    for (std::size_t k = 0; k <= n; ++k)
      if (lintree::BigInt(oc.linearByK[k]) != table.count(n, k))
        problems.push_back("k=" + std::to_string(k) + ": oracle " + std::to_string(oc.linearByK[k]) + ", series " +
                           table.count(n, k).str());
    if (lintree::BigInt(oc.total) != trees[n])
      problems.push_back("total: oracle " + std::to_string(oc.total) + ", recurrence " + trees[n].str());
    if (lintree::BigInt(oc.linear()) != lintree::linear_total(table, n))
      problems.push_back("linear: oracle " + std::to_string(oc.linear()) + ", series " +
                         lintree::linear_total(table, n).str());

    const std::string label = ns.size() > 1 ? "n=" + std::to_string(n) + " " : "";
    if (problems.empty()) {
      os << label << "OK: " << oc.total << " trees, " << oc.linear() << " linear, " << oc.nonlinear
         << " nonlinear, all k-buckets match\n";
    } else {
      allOk = false;
      os << label << "MISMATCH: n=" << n;
      for (const auto& p : problems) os << "; " << p;
      os << '\n';
    }
  }
  sink.finish();

  if (!cfg.nonlinearOut.empty()) {
    Sink trees_out(cfg.nonlinearOut);
    for (const auto& t : nonlinearTrees) trees_out.stream() << t << '\n';
    trees_out.finish();
  }
  return allOk ? kExitOk : kExitMismatch;
}

int cmd_asymptotics(const RunConfig& cfg) {
  const auto k = lintree::clt_constants(cfg.precision);
  const auto table = lintree::klinear_table(std::max<std::size_t>(cfg.maxN, 100));
  const auto schema = lintree::verify_schema(k, table);
  Sink sink(cfg.out);
  sink.stream() << lintree::report::asymptotics_json(k, &schema).dump(2) << '\n';
  sink.finish();
  return schema.ok() ? kExitOk : kExitMismatch;
}

int cmd_clt(const RunConfig& cfg) {
  if (cfg.ns.empty()) throw UsageError("clt needs --n with a comma-separated list");
  std::size_t top = 1;
  for (auto n : cfg.ns) top = std::max(top, n);
  const auto table = lintree::klinear_table(top);
  const auto k = lintree::clt_constants(cfg.precision);
  std::vector<lintree::CltDiagnostics> rows;
  for (auto n : cfg.ns) rows.push_back(lintree::empirical_clt(table, n, k));
  Sink sink(cfg.out);
  lintree::report::write_clt_csv(sink.stream(), rows);
  sink.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts, census and asymptotics of linear trees"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* table = app.add_subcommand("table", "k-linear tree counts a(n,k), rows 10..max-n");
  table->add_option("--max-n", cfg.maxN, "largest vertex count")->capture_default_str();
  table->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  table->add_flag("--long", cfg.longForm, "long CSV form n,k,a");
  table->add_option("--out", cfg.out, "output path (default stdout)");

  auto* census = app.add_subcommand("census", "nonlinear/linear/total trees, rows 10..max-n");
  census->add_option("--max-n", cfg.maxN, "largest vertex count")->capture_default_str();
  census->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  census->add_option("--out", cfg.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "compare brute-force enumeration with the series counts");
  verify->add_option("--n", cfg.ns, "vertex counts to check")->delimiter(',');
  verify->add_option("--max-n", cfg.maxN, "check every n in 1..max-n when --n is absent");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  verify->add_option("--oracle-limit", cfg.oracleLimit, "largest n the enumerator accepts")->capture_default_str();
  verify->add_option("--nonlinear-out", cfg.nonlinearOut, "write nonlinear trees as edge lists");
  verify->add_option("--out", cfg.out, "report path (default stdout)");

  auto* asym = app.add_subcommand("asymptotics", "dominant pole, growth and CLT constants as JSON");
  asym->add_option("--precision", cfg.precision, "decimal digits")->capture_default_str();
  asym->add_option("--max-n", cfg.maxN, "counts table size for the schema check (at least 100)");
  asym->add_option("--out", cfg.out, "output path (default stdout)");

  auto* clt = app.add_subcommand("clt", "empirical mean, variance, mode and KS distance of a(n,k)/a(n)");
  clt->add_option("--n", cfg.ns, "vertex counts, comma separated")->delimiter(',')->required();
  clt->add_option("--precision", cfg.precision, "decimal digits")->capture_default_str();
  clt->add_option("--out", cfg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed() && verify->count("--max-n") == 0) cfg.maxN = 1;

  try {
    cfg.validate();
    if (table->parsed()) return cmd_table(cfg);
    if (census->parsed()) return cmd_census(cfg);
    if (verify->parsed()) {
      if (cfg.ns.empty() && verify->count("--max-n") == 0) throw UsageError("verify needs --n or --max-n");
      return cmd_verify(cfg);
    }
    if (asym->parsed()) return cmd_asymptotics(cfg);
    if (clt->parsed()) return cmd_clt(cfg);
  } catch (const UsageError& e) {
    std::cerr << "lintree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lintree::OracleLimitExceeded& e) {
    std::cerr << "lintree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lintree: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
