// fpselberg: evaluate, classify and verify two-dimensional F_p-Selberg integrals.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.

#include "fpselberg/closed2d.hpp"
#include "fpselberg/errors.hpp"
#include "fpselberg/morris.hpp"
#include "fpselberg/selberg.hpp"
#include "fpselberg/sweep.hpp"
#include "fpselberg/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace fs = fpselberg;

namespace {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResource = 3 };

struct IntegralArgs {
  std::uint32_t p = 0;
  std::int64_t a = 0, b = 0, c = 0;
  std::vector<std::int64_t> params;
  std::vector<std::uint32_t> cycle{1, 1};
  std::string method = "closed";
  bool verbose = false;
};

void add_integral_options(CLI::App& cmd, IntegralArgs& args, bool with_method) {
  cmd.add_option("-p,--prime", args.p, "odd prime p")->required();
  cmd.add_option("-a", args.a, "parameter a, 0 < a < p");
  cmd.add_option("-b", args.b, "parameter b, 0 < b < p");
  cmd.add_option("-c", args.c, "parameter c, 0 < c < p");
  cmd.add_option("--params", args.params, "a,b,c")->delimiter(',')->expected(3);
  cmd.add_option("-l,--cycle", args.cycle, "cycle l1,l2")->delimiter(',')->expected(2);
  if (with_method)
    cmd.add_option("--method", args.method, "bruteforce | direct | closed")
        ->check(CLI::IsMember({"bruteforce", "direct", "closed"}));
  cmd.add_flag("-v,--verbose", args.verbose, "show the instantiated formula");
}

fs::SelbergParams resolve_params(const IntegralArgs& args) {
  if (!args.params.empty())
    return fs::SelbergParams(args.p, args.params[0], args.params[1], args.params[2]);
  return fs::SelbergParams(args.p, args.a, args.b, args.c);
}

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw fs::DomainError("cannot open output path '" + path + "' for writing");
    stream = file.get();
  }
  std::ostream& operator*() { return *stream; }
};

int cmd_eval(const IntegralArgs& args) {
  const fs::FpContext ctx(args.p);
  const fs::SelbergParams params = resolve_params(args);
  const auto l1 = args.cycle.at(0), l2 = args.cycle.at(1);
  const fs::ClosedForm form = fs::closed_form(params, l1, l2);

  fs::Fp value;
  switch (fs::parse_method(args.method)) {
  case fs::Method::Bruteforce:
    value = fs::selberg_bruteforce(ctx, fs::MasterPolySpec(2, params), fs::Cycle{l1, l2});
    break;
  case fs::Method::Direct: value = fs::selberg_direct_2d(ctx, params, l1, l2); break;
  case fs::Method::Closed: value = fs::eval_closed(ctx, params, l1, l2); break;
  }

  std::cout << "value: " << value << '\n'
            << "branch: " << fs::to_string(form.tag.branch) << '\n';
  if (args.verbose) {
    std::cout << "method: " << args.method << '\n'
              << "cycle_class: " << fs::to_string(form.tag.cycle_class) << '\n'
              << "conditions: " << fs::describe(form.tag.branch) << '\n'
              << "delta: " << params.delta() << '\n';
    if (form.formula)
      std::cout << "formula: " << form.formula->to_string() << " = "
                << form.formula->evaluate(ctx) << " (mod " << ctx.p() << ")\n";
    else
      std::cout << "formula: 0\n";
  }
  return kOk;
}

int cmd_classify(const IntegralArgs& args) {
  const fs::FpContext ctx(args.p);
  const fs::SelbergParams params = resolve_params(args);
  const auto [lo, hi] = fs::canonical_cycle(args.cycle.at(0), args.cycle.at(1));
  const fs::CaseTag tag = fs::classify(params, lo, hi);
  std::cout << "branch: " << fs::to_string(tag.branch) << '\n'
            << "cycle_class: " << fs::to_string(tag.cycle_class) << '\n'
            << "canonical_cycle: [" << lo << ',' << hi << "]\n"
            << "conditions: " << fs::describe(tag.branch) << '\n'
            << "zero_branch: " << (fs::is_zero_branch(tag.branch) ? "true" : "false") << '\n'
            << "condition_set: " << fs::to_string(fs::condition_set(params)) << '\n'
            << "delta: " << params.delta() << '\n';
  return kOk;
}

struct BatchArgs {
  std::vector<std::uint32_t> primes{3, 5, 7, 11, 13};
  std::uint32_t cycle_bound = 4;
  std::vector<std::string> suites;
  std::vector<std::string> methods;
  std::string method = "closed";
  bool integer_mode = false;
  std::string format;
  std::string out;
  unsigned jobs = 1;
};

int cmd_verify(const BatchArgs& args) {
  fs::SweepConfig config;
  config.primes = args.primes;
  config.cycle_bound = args.cycle_bound;
  config.integer_mode = args.integer_mode;
  config.jobs = args.jobs;
  config.output_format = fs::parse_format(args.format.empty() ? "text" : args.format);
  if (!args.methods.empty()) {
    config.methods.clear();
    for (const auto& m : args.methods) config.methods.push_back(fs::parse_method(m));
  }
  if (args.suites.empty())
    config.suites = fs::all_suites();
  else
    for (const auto& s : args.suites) config.suites.push_back(fs::parse_suite(s));
  fs::validate(config);

  Output out(args.out);
  const fs::VerificationReport report = fs::run_verification(config);
  fs::write_report(*out, report, config.output_format);
  if (!args.out.empty())
    std::cerr << (report.ok() ? "OK" : "FAILED") << ": " << report.total_failed()
              << " failures, report written to " << args.out << '\n';
  return report.ok() ? kOk : kVerificationFailure;
}

int cmd_sweep(const BatchArgs& args) {
  fs::SweepOptions options;
  options.primes = args.primes;
  options.cycle_bound = args.cycle_bound;
  options.method = fs::parse_method(args.method);
  options.jobs = args.jobs;
  fs::validate(options);
  const auto format = fs::parse_format(args.format.empty() ? "csv" : args.format);

  Output out(args.out);
  const auto rows = fs::run_sweep(options);
  fs::write_sweep(*out, rows, format);
  if (!*out) throw fs::DomainError("failed writing sweep output");
  return kOk;
}

struct MorrisArgs {
  std::uint32_t n = 2, alpha = 0, beta = 0, gamma = 0;
};

int cmd_morris(const MorrisArgs& args) {
  const fs::MorrisParams mp{args.n, args.alpha, args.beta, args.gamma};
  const fs::BigInt rhs = fs::morris_rhs(mp);
  std::cout << "product: " << rhs << '\n';
  const fs::BigInt ct = fs::morris_ct_bruteforce(mp);
  const fs::BigInt sym = fs::morris_lhs_symmetric_form(mp);
  std::cout << "constant_term: " << ct << '\n'
            << "symmetric_form: " << sym << '\n';
  const bool ok = ct == rhs && sym == ct;
  std::cout << (ok ? "identity holds" : "MISMATCH") << '\n';
  return ok ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and verify two-dimensional F_p-Selberg integrals"};
  app.require_subcommand(1);

  IntegralArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one integral");
  add_integral_options(*eval, eval_args, true);

  IntegralArgs classify_args;
  auto* classify = app.add_subcommand("classify", "report the case branch for one integral");
  add_integral_options(*classify, classify_args, false);

  BatchArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_args.suites, "suite names")->delimiter(',');
  verify->add_option("--primes", verify_args.primes, "comma-separated primes")->delimiter(',');
  verify->add_option("--cycle-bound", verify_args.cycle_bound, "max l");
  verify->add_option("--methods", verify_args.methods, "methods compared by oracle_equiv")
      ->delimiter(',');
  verify->add_flag("--integer-mode", verify_args.integer_mode, "check integer-level vanishing");
  verify->add_option("--format", verify_args.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", verify_args.out, "report path (default stdout)");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")->check(CLI::PositiveNumber);

  BatchArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "tabulate every (p,a,b,c,l1,l2)");
  sweep->add_option("--primes", sweep_args.primes, "comma-separated primes")->delimiter(',');
  sweep->add_option("--cycle-bound", sweep_args.cycle_bound, "max l");
  sweep->add_option("--method", sweep_args.method, "bruteforce | direct | closed")
      ->check(CLI::IsMember({"bruteforce", "direct", "closed"}));
  sweep->add_option("--format", sweep_args.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sweep->add_option("--out", sweep_args.out, "output path (default stdout)");
  sweep->add_option("--jobs", sweep_args.jobs, "worker threads")->check(CLI::PositiveNumber);

  MorrisArgs morris_args;
  auto* morris = app.add_subcommand("morris", "check the Morris constant-term identity");
  morris->add_option("-n", morris_args.n, "dimension");
  morris->add_option("--alpha", morris_args.alpha);
  morris->add_option("--beta", morris_args.beta);
  morris->add_option("--gamma", morris_args.gamma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args);
    if (*classify) return cmd_classify(classify_args);
    if (*verify) return cmd_verify(verify_args);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*morris) return cmd_morris(morris_args);
  } catch (const fs::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kResource;
  } catch (const fs::GuardError& e) {
    std::cerr << "internal guard: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
