#include <CLI11.hpp>
#include <functional>
#include <iostream>

#include "midx/selfcheck.hpp"
#include "midx/version.hpp"
#include "report.hpp"

namespace {

using midx::GradingContext;
using midx::cli::Format;

struct CommonOptions {
  std::string delta = "1";
  bool limit = false;
  std::string format = "text";
};

GradingContext make_context(const CommonOptions& opts) {
  return GradingContext(midx::parse_rational(opts.delta), opts.limit);
}

void add_format_option(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "output format: text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
}

void add_context_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--delta", opts.delta, "noise regularity parameter, a rational P/Q in (0,1]")
      ->required();
  cmd->add_flag("--limit", opts.limit, "use the limit convention (negative includes homogeneity 0)");
  add_format_option(cmd, opts);
}

int run_verify(int max_noises, const std::string& fault_name) {
  midx::selfcheck::Fault fault = midx::selfcheck::Fault::None;
  if (fault_name == "grading")
    fault = midx::selfcheck::Fault::Grading;
  else if (!fault_name.empty())
    throw std::invalid_argument("unknown fault '" + fault_name + "'");

  const auto results = midx::selfcheck::run_all(max_noises, fault);
  int failures = 0;
  for (const auto& result : results) {
    std::cout << (result.passed ? "PASS" : "FAIL") << " " << result.name << " - " << result.detail
              << "\n";
    if (!result.passed) ++failures;
  }
  std::cout << "verification: " << results.size() - failures << "/" << results.size()
            << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multi-index calculus for the generalised KPZ equation"};
  app.set_version_flag("--version", midx::kVersion);
  app.require_subcommand(1);

  std::function<int()> action;

  CommonOptions enum_opts;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list the negative multi-indices");
  add_context_options(enumerate, enum_opts);
  enumerate->callback([&] {
    action = [&enum_opts] {
      const auto doc = midx::cli::enumerate_report(make_context(enum_opts));
      std::cout << doc.render(midx::cli::parse_format(enum_opts.format));
      return 0;
    };
  });

  CommonOptions reduced_opts;
  bool reduced_even = false;
  bool with_fibers = false;
  CLI::App* reduced = app.add_subcommand("reduced", "list the reduced negative multi-indices");
  add_context_options(reduced, reduced_opts);
  reduced->add_flag("--even", reduced_even, "keep only even noise counts");
  reduced->add_flag("--with-fibers", with_fibers, "include the tree fiber of each element");
  reduced->callback([&] {
    action = [&reduced_opts, &reduced_even, &with_fibers] {
      // The reduced table is a limit-convention object; delta = 1 already
      // forces it, smaller delta follows the flag.
      const auto doc = midx::cli::reduced_report(make_context(reduced_opts), reduced_even, with_fibers);
      std::cout << doc.render(midx::cli::parse_format(reduced_opts.format));
      return 0;
    };
  });

  CLI::App* geo = app.add_subcommand("geo", "geometric (chain-rule) counterterm space");
  geo->require_subcommand(1);
  int geo_noises = 0;
  CommonOptions geo_opts;
  CLI::App* geo_dim = geo->add_subcommand("dim", "dimension of the kernel at a noise level");
  geo_dim->add_option("--noises", geo_noises, "noise count N >= 2")->required();
  add_format_option(geo_dim, geo_opts);
  geo_dim->callback([&] {
    action = [&geo_noises, &geo_opts] {
      const auto doc = midx::cli::geo_dim_report(geo_noises);
      std::cout << doc.render(midx::cli::parse_format(geo_opts.format));
      return 0;
    };
  });
  CLI::App* geo_basis = geo->add_subcommand("basis", "kernel basis at a noise level");
  geo_basis->add_option("--noises", geo_noises, "noise count N >= 2")->required();
  add_format_option(geo_basis, geo_opts);
  geo_basis->callback([&] {
    action = [&geo_noises, &geo_opts] {
      const auto doc = midx::cli::geo_basis_report(geo_noises);
      std::cout << doc.render(midx::cli::parse_format(geo_opts.format));
      return 0;
    };
  });

  CommonOptions counter_opts;
  bool gaussian = false;
  CLI::App* counterterms = app.add_subcommand("counterterms", "render the renormalisation summands");
  add_context_options(counterterms, counter_opts);
  counterterms->add_flag("--gaussian", gaussian, "keep only the even (Gaussian) sector");
  counterterms->callback([&] {
    action = [&counter_opts, &gaussian] {
      const auto doc = midx::cli::counterterms_report(make_context(counter_opts), gaussian);
      std::cout << doc.render(midx::cli::parse_format(counter_opts.format));
      return 0;
    };
  });

  int max_noises = 5;
  std::string fault_name;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-noises", max_noises, "largest noise level checked (default 5)")
      ->check(CLI::Range(2, 8));
  verify->add_option("--inject-fault", fault_name, "test hook: corrupt a named constant")
      ->group("");
  verify->callback([&] {
    action = [&max_noises, &fault_name] { return run_verify(max_noises, fault_name); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
