#include "report.hpp"

#include <map>
#include <sstream>

#include "midx/tree.hpp"
#include "midx/upsilon.hpp"
#include "midx/version.hpp"

namespace midx::cli {

namespace {

nlohmann::ordered_json json_integer(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return to_string(value);
}

std::string homogeneity_label(const Rational& hom, bool limit) {
  return to_string(hom) + (limit ? " (limit-negative)" : "");
}

std::string homogeneity_compact(const Rational& hom, bool limit) {
  return to_string(hom) + (limit ? "^-" : "");
}

std::string latex_multi_index(const MultiIndex& beta) {
  if (beta.empty()) return "1";
  std::ostringstream out;
  for (const auto& [v, e] : beta.exponents()) {
    switch (v.kind) {
      case VarKind::Noise: out << "z_{(\\circ," << v.a << ")}"; break;
      case VarKind::Quad: out << "z_{(\\bullet_2," << v.a << ")}"; break;
      case VarKind::Lin: out << "z_{(\\bullet_1," << v.a << ")}"; break;
      case VarKind::Func: out << "z_{(0," << v.a << ")}"; break;
      case VarKind::Diff: out << "z_{(h," << v.a << ")}"; break;
      case VarKind::Poly: out << "X^{(" << v.a << "," << v.b << ")}"; break;
    }
    if (e >= 2) out << "^{" << e << "}";
  }
  return out.str();
}

std::string latex_homogeneity(const Rational& hom, bool limit) {
  std::string body = to_string(hom);
  if (hom.get_den() != 1)
    body = (hom < 0 ? "-" : "") + std::string("\\tfrac{") + Integer(abs(hom.get_num())).get_str() +
           "}{" + hom.get_den().get_str() + "}";
  if (limit) return "$(" + body + ")^-$";
  return "$" + body + "$";
}

nlohmann::ordered_json element_json(const MultiIndex& beta, const GradingContext& ctx) {
  nlohmann::ordered_json j;
  j["beta"] = beta.str();
  j["homogeneity"] = to_string(beta.homogeneity(ctx));
  j["limit_marker"] = ctx.limit_mode;
  j["noises"] = beta.noise_count();
  j["fertility"] = beta.fertility();
  j["sigma_factor"] = json_integer(beta.symmetry_factor());
  return j;
}

struct ClassifiedSet {
  // Classes keyed by homogeneity, ascending.
  std::map<Rational, std::vector<MultiIndex>> classes;
  std::size_t total = 0;
};

ClassifiedSet classify(const std::vector<MultiIndex>& set, const GradingContext& ctx) {
  ClassifiedSet out;
  out.total = set.size();
  for (const MultiIndex& beta : set) out.classes[beta.homogeneity(ctx)].push_back(beta);
  return out;
}

std::string latex_table(const ClassifiedSet& set, const GradingContext& ctx) {
  std::ostringstream out;
  out << "\\begin{tabular}{c | c | c}\n"
      << "$|\\beta|$ & $\\beta$ & $\\#\\{\\beta\\}$ \\\\\n\\hline\n";
  for (const auto& [hom, elements] : set.classes) {
    out << latex_homogeneity(hom, ctx.limit_mode) << " & $";
    bool first = true;
    for (const MultiIndex& beta : elements) {
      if (!first) out << ",\\; ";
      first = false;
      out << latex_multi_index(beta);
    }
    out << "$ & " << elements.size() << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

nlohmann::ordered_json context_parameters(const GradingContext& ctx) {
  nlohmann::ordered_json j;
  j["delta"] = to_string(ctx.delta);
  j["limit"] = ctx.limit_mode;
  return j;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

std::string ReportDocument::render(Format format) const {
  switch (format) {
    case Format::Text: return text;
    case Format::Latex: return latex.empty() ? text : latex;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["schema_version"] = 1;
      j["command"] = command;
      j["version"] = kVersion;
      j["parameters"] = parameters;
      j["payload"] = payload;
      return j.dump(2) + "\n";
    }
  }
  return text;
}

ReportDocument enumerate_report(const GradingContext& ctx) {
  ReportDocument doc;
  doc.command = "enumerate";
  doc.parameters = context_parameters(ctx);

  const ClassifiedSet set = classify(enumerate_negative(ctx), ctx);

  doc.payload["total"] = set.total;
  auto& classes = doc.payload["classes"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "negative multi-indices at delta = " << to_string(ctx.delta)
       << (ctx.limit_mode ? " (limit mode)" : "") << "\n"
       << "total: " << set.total << " in " << set.classes.size() << " classes\n";
  for (const auto& [hom, elements] : set.classes) {
    nlohmann::ordered_json cls;
    cls["homogeneity"] = to_string(hom);
    cls["limit_marker"] = ctx.limit_mode;
    cls["count"] = elements.size();
    auto& arr = cls["elements"] = nlohmann::ordered_json::array();
    text << "\nhomogeneity " << homogeneity_label(hom, ctx.limit_mode) << "  [" << elements.size()
         << "]\n";
    for (const MultiIndex& beta : elements) {
      arr.push_back(element_json(beta, ctx));
      text << "  " << beta.str() << "\n";
    }
    classes.push_back(std::move(cls));
  }
  doc.text = text.str();
  doc.latex = latex_table(set, ctx);
  return doc;
}

ReportDocument reduced_report(const GradingContext& ctx, bool even_only, bool with_fibers) {
  ReportDocument doc;
  doc.command = "reduced";
  doc.parameters = context_parameters(ctx);
  doc.parameters["even"] = even_only;
  doc.parameters["with_fibers"] = with_fibers;

  const ClassifiedSet set = classify(enumerate_reduced(ctx, even_only), ctx);

  doc.payload["total"] = set.total;
  auto& classes = doc.payload["classes"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "reduced multi-indices at delta = " << to_string(ctx.delta)
       << (ctx.limit_mode ? " (limit mode)" : "") << (even_only ? ", even noise only" : "") << "\n"
       << "total: " << set.total << " in " << set.classes.size() << " classes\n";
  for (const auto& [hom, elements] : set.classes) {
    nlohmann::ordered_json cls;
    cls["homogeneity"] = to_string(hom);
    cls["limit_marker"] = ctx.limit_mode;
    cls["count"] = elements.size();
    auto& arr = cls["elements"] = nlohmann::ordered_json::array();
    text << "\nhomogeneity " << homogeneity_label(hom, ctx.limit_mode) << "  [" << elements.size()
         << "]\n";
    for (const MultiIndex& beta : elements) {
      nlohmann::ordered_json element = element_json(beta, ctx);
      text << "  " << beta.str();
      if (with_fibers) {
        const auto trees = fiber(beta);
        element["fiber_size"] = trees.size();
        auto& fibers = element["fiber"] = nlohmann::ordered_json::array();
        for (const DecoratedTree& t : trees) fibers.push_back(t.str());
        text << "  [fiber " << trees.size() << "]";
      }
      text << "\n";
      arr.push_back(std::move(element));
    }
    classes.push_back(std::move(cls));
  }
  doc.text = text.str();
  doc.latex = latex_table(set, ctx);
  return doc;
}

ReportDocument geo_dim_report(int noises) {
  ReportDocument doc;
  doc.command = "geo dim";
  doc.parameters["noises"] = noises;
  const KernelReport report = assemble_kernel_matrix(noises);
  doc.payload["noises"] = noises;
  doc.payload["dimension"] = report.dimension;
  doc.text = std::to_string(report.dimension) + "\n";
  doc.latex = "$\\dim V^{" + std::to_string(noises) + "}_{\\mathrm{geo}} = " +
              std::to_string(report.dimension) + "$\n";
  return doc;
}

ReportDocument geo_basis_report(int noises) {
  ReportDocument doc;
  doc.command = "geo basis";
  doc.parameters["noises"] = noises;
  const KernelReport report = assemble_kernel_matrix(noises);

  doc.payload["noises"] = noises;
  doc.payload["dimension"] = report.dimension;
  auto& columns = doc.payload["columns"] = nlohmann::ordered_json::array();
  for (const MultiIndex& beta : report.columns) columns.push_back(beta.str());
  auto& rows = doc.payload["rows"] = nlohmann::ordered_json::array();
  for (const MultiIndex& beta : report.rows) rows.push_back(beta.str());
  auto& matrix = doc.payload["matrix"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < report.columns.size(); ++c)
      row.push_back(to_string(report.matrix.at(r, c)));
    matrix.push_back(std::move(row));
  }
  auto& basis = doc.payload["kernel_basis"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  std::ostringstream latex;
  latex << "\\begin{align*}\n";
  for (const Poly& v : report.kernel_basis) {
    basis.push_back(v.str());
    text << v.str() << "\n";
    latex << "& " << v.str() << " \\\\\n";
  }
  latex << "\\end{align*}\n";
  doc.text = text.str();
  doc.latex = latex.str();
  return doc;
}

ReportDocument counterterms_report(const GradingContext& ctx, bool gaussian) {
  ReportDocument doc;
  doc.command = "counterterms";
  doc.parameters = context_parameters(ctx);
  doc.parameters["gaussian"] = gaussian;

  const std::vector<CountertermRow> rows = counterterm_report(ctx, gaussian);
  doc.payload["total"] = rows.size();
  auto& arr = doc.payload["rows"] = nlohmann::ordered_json::array();

  std::ostringstream text;
  text << "counterterms at delta = " << to_string(ctx.delta)
       << (ctx.limit_mode ? " (limit mode)" : "") << (gaussian ? ", gaussian (even) sector" : "")
       << "\n";
  std::ostringstream sum;
  std::ostringstream latex;
  latex << "\\begin{tabular}{c | c | c | c | c | c}\n"
        << "$\\beta$ & $|\\beta|$ & $\\sigma(\\beta)$ & It\\^o & geo & $\\Upsilon$ \\\\\n\\hline\n";
  for (const CountertermRow& row : rows) {
    nlohmann::ordered_json j;
    j["beta"] = row.beta.str();
    j["homogeneity"] = to_string(row.homogeneity);
    j["limit_marker"] = ctx.limit_mode;
    j["noises"] = row.noises;
    j["fertility"] = row.fertility;
    j["sigma_factor"] = json_integer(row.sigma);
    j["upsilon_prefactor"] = json_integer(row.upsilon.prefactor);
    j["upsilon"] = row.upsilon.str();
    j["ito"] = row.ito;
    j["geometric"] = row.geometric;
    j["constant"] = row.constant_label;
    arr.push_back(std::move(j));

    text << "\n" << row.beta.str() << "\n"
         << "  homogeneity " << homogeneity_compact(row.homogeneity, ctx.limit_mode)
         << ", noises " << row.noises << ", sigma " << to_string(row.sigma) << ", ito "
         << (row.ito ? "yes" : "no") << ", geo " << (row.geometric ? "yes" : "no") << "\n"
         << "  upsilon: " << row.upsilon.str() << "\n";
    sum << "  + " << row.constant_label << "\u00b7" << row.upsilon.str() << "\n";
    latex << "$" << latex_multi_index(row.beta) << "$ & "
          << latex_homogeneity(row.homogeneity, ctx.limit_mode) << " & " << to_string(row.sigma)
          << " & " << (row.ito ? "yes" : "no") << " & " << (row.geometric ? "yes" : "no") << " & $"
          << row.upsilon.str() << "$ \\\\\n";
  }
  latex << "\\end{tabular}\n";
  text << "\nrenormalised equation tail:\n" << sum.str();
  doc.text = text.str();
  doc.latex = latex.str();
  return doc;
}

}  // namespace midx::cli
