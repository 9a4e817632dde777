#include "su2cp/cli.hpp"

#include "su2cp/checks.hpp"
#include "su2cp/oscillator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace su2cp::cli {

namespace {

using json = nlohmann::json;
using oscillator::ModelKind;
using oscillator::OscillatorModel;
using oscillator::Picture;

/// Negative zero carries no information here; keep emitted files tidy.
double clean_zero(double v) { return v == 0.0 ? 0.0 : v; }

/// Locale-independent formatting at 17 significant digits.
std::string fmt(double v) {
  v = clean_zero(v);
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

int write_output(const std::string& content, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  if (path == "-") {
    out << content;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  f << content;
  return f.good() ? 0 : 2;
}

std::vector<ModelKind> models_for(const std::string& name) {
  if (name == "all") return {ModelKind::su2, ModelKind::sl21, ModelKind::su2cp};
  return {oscillator::model_from_string(name)};
}

// ---- spectrum ----

std::string spectrum_csv(int j, const std::vector<ModelKind>& models) {
  std::ostringstream os;
  os << "model,index,position\n";
  for (ModelKind kind : models) {
    const auto q = oscillator::comparison_spectra(kind, algebra::RepLabel(j));
    for (std::size_t i = 0; i < q.size(); ++i)
      os << oscillator::to_string(kind) << ',' << i << ',' << fmt(q[i]) << '\n';
  }
  return os.str();
}

std::string spectrum_json(int j, const std::vector<ModelKind>& models) {
  json doc;
  doc["command"] = "spectrum";
  doc["j"] = j;
  doc["models"] = json::array();
  for (ModelKind kind : models) {
    json entry;
    entry["model"] = oscillator::to_string(kind);
    json positions = json::array();
    for (double q : oscillator::comparison_spectra(kind, algebra::RepLabel(j)))
      positions.push_back(clean_zero(q));
    entry["positions"] = std::move(positions);
    doc["models"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string spectrum_svg(int j, const std::vector<ModelKind>& models) {
  const double width = 640.0, row_h = 70.0, left = 90.0, right = 610.0;
  const double height = 20.0 + row_h * models.size();
  const double span = 2.0 * j + 1.0;
  auto xmap = [&](double q) { return left + (q + j + 0.5) / span * (right - left); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  for (std::size_t row = 0; row < models.size(); ++row) {
    const double y = 45.0 + row_h * row;
    const auto q = oscillator::comparison_spectra(models[row], algebra::RepLabel(j));
    os << "  <text x=\"8\" y=\"" << fmt(y + 4) << "\" font-size=\"14\">"
       << oscillator::to_string(models[row]) << "</text>\n";
    os << "  <line x1=\"" << fmt(left) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(right)
       << "\" y2=\"" << fmt(y) << "\" stroke=\"#999\"/>\n";
    for (double v : q)
      os << "  <circle cx=\"" << fmt(xmap(v)) << "\" cy=\"" << fmt(y)
         << "\" r=\"4\" fill=\"#1f3b73\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---- wavefunction ----

std::vector<oscillator::WavefunctionTable> select_tables(const OscillatorModel& model,
                                                         Picture picture,
                                                         const std::vector<int>& ns) {
  const auto all = picture == Picture::position ? model.position_wavefunctions()
                                                : model.momentum_wavefunctions();
  std::vector<oscillator::WavefunctionTable> chosen;
  chosen.reserve(ns.size());
  for (int n : ns) chosen.push_back(all[static_cast<std::size_t>(n)]);
  return chosen;
}

std::string wavefunction_csv(const std::vector<oscillator::WavefunctionTable>& tables) {
  std::ostringstream os;
  os << "n,q,re,im\n";
  for (const auto& t : tables)
    for (const auto& [q, amp] : t.entries)
      os << t.n << ',' << fmt(q) << ',' << fmt(amp.real()) << ',' << fmt(amp.imag()) << '\n';
  return os.str();
}

std::string wavefunction_json(int j, Picture picture,
                              const std::vector<oscillator::WavefunctionTable>& tables) {
  json doc;
  doc["command"] = "wavefunction";
  doc["j"] = j;
  doc["picture"] = oscillator::to_string(picture);
  doc["states"] = json::array();
  for (const auto& t : tables) {
    json entry;
    entry["n"] = t.n;
    json grid = json::array(), re = json::array(), im = json::array();
    for (const auto& [q, amp] : t.entries) {
      grid.push_back(clean_zero(q));
      re.push_back(clean_zero(amp.real()));
      im.push_back(clean_zero(amp.imag()));
    }
    entry["grid"] = std::move(grid);
    entry["re"] = std::move(re);
    entry["im"] = std::move(im);
    doc["states"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string wavefunction_svg(int j, const std::vector<oscillator::WavefunctionTable>& tables) {
  const double width = 640.0, panel_h = 150.0, left = 50.0, right = 620.0;
  const double height = 10.0 + panel_h * tables.size();
  const double span = 2.0 * (j + 1.0);
  auto xmap = [&](double q) { return left + (q + j + 1.0) / span * (right - left); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  for (std::size_t p = 0; p < tables.size(); ++p) {
    const auto& t = tables[p];
    const double mid = 10.0 + panel_h * p + panel_h / 2.0;
    const double amp_scale = 60.0;
    os << "  <text x=\"8\" y=\"" << fmt(mid - 55.0) << "\" font-size=\"13\">n=" << t.n
       << "</text>\n";
    os << "  <line x1=\"" << fmt(left) << "\" y1=\"" << fmt(mid) << "\" x2=\"" << fmt(right)
       << "\" y2=\"" << fmt(mid) << "\" stroke=\"#bbb\"/>\n";
    for (const auto& [q, amp] : t.entries) {
      const double x = xmap(q);
      const double yr = mid - amp.real() * amp_scale;
      os << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(mid) << "\" x2=\"" << fmt(x)
         << "\" y2=\"" << fmt(yr) << "\" stroke=\"#1f3b73\"/>\n";
      os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(yr)
         << "\" r=\"3\" fill=\"#1f3b73\"/>\n";
      if (amp.imag() != 0.0) {
        const double yi = mid - amp.imag() * amp_scale;
        os << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(mid) << "\" x2=\"" << fmt(x)
           << "\" y2=\"" << fmt(yi) << "\" stroke=\"#a33\"/>\n";
        os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(yi)
           << "\" r=\"3\" fill=\"#a33\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

// ---- transform ----

std::string transform_csv(const numerics::ComplexMatrix& k) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (int r = 0; r < k.rows(); ++r)
    for (int c = 0; c < k.cols(); ++c)
      os << r << ',' << c << ',' << fmt(k(r, c).real()) << ',' << fmt(k(r, c).imag()) << '\n';
  return os.str();
}

std::string transform_json(int j, const numerics::ComplexMatrix& k) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < k.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < k.cols(); ++c) {
      re_row.push_back(clean_zero(k(r, c).real()));
      im_row.push_back(clean_zero(k(r, c).imag()));
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json doc;
  doc["command"] = "transform";
  doc["j"] = j;
  doc["shape"] = {k.rows(), k.cols()};
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump(2) + "\n";
}

// ---- verify ----

json verify_report(const checks::VerifySummary& summary, int j_max, int exact_j_max,
                   double tol) {
  json doc;
  doc["command"] = "verify";
  doc["j_max"] = j_max;
  doc["exact_j_max"] = exact_j_max;
  doc["tol"] = tol;
  doc["all_pass"] = summary.all_pass;
  doc["checks"] = json::array();
  for (const auto& c : summary.results) {
    json entry;
    entry["name"] = c.name;
    entry["cases"] = c.cases;
    entry["failures"] = c.failures;
    entry["max_residual"] = c.max_residual;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    doc["checks"].push_back(std::move(entry));
  }
  return doc;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"su(2)_CP finite oscillator model: spectra, wavefunctions, transforms"};
  app.require_subcommand(1);

  int j = 0;
  std::string model = "su2cp";
  std::string format = "csv";
  std::string output = "-";
  std::vector<int> ns;
  std::string picture = "position";
  int j_max = 30;
  int exact_j_max = 15;
  double tol = 1e-10;
  double corrupt_mk = 0.0;

  auto* spectrum =
      app.add_subcommand("spectrum", "Position spectrum of a finite oscillator model");
  spectrum->add_option("--j", j, "representation label j")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("--model", model, "su2, sl21, su2cp or all")
      ->check(CLI::IsMember({"su2", "sl21", "su2cp", "all"}));
  spectrum->add_option("--format", format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  spectrum->add_option("--output", output, "output path, or - for stdout");

  auto* wavefunction =
      app.add_subcommand("wavefunction", "Discrete wavefunction tables of the su2cp model");
  wavefunction->add_option("--j", j, "representation label j")
      ->required()
      ->check(CLI::NonNegativeNumber);
  wavefunction->add_option("--n", ns, "state index (repeatable), 0 <= n <= 2j")->required();
  wavefunction->add_option("--picture", picture, "position or momentum")
      ->check(CLI::IsMember({"position", "momentum"}));
  wavefunction->add_option("--format", format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  wavefunction->add_option("--output", output, "output path, or - for stdout");

  auto* transform = app.add_subcommand("transform", "CP Krawtchouk transform matrix");
  transform->add_option("--j", j, "representation label j")
      ->required()
      ->check(CLI::NonNegativeNumber);
  transform->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  transform->add_option("--output", output, "output path, or - for stdout");

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--j-max", j_max, "largest j for the floating-point suites")
      ->check(CLI::PositiveNumber);
  verify->add_option("--exact-j-max", exact_j_max, "largest j for the exact identity suites")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "tolerance for the floating-point suites")
      ->check(CLI::PositiveNumber);
  verify->add_option("--debug-corrupt-mk", corrupt_mk)->group(""); // hidden failure-path hook

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("su2cp");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum->parsed()) {
      const auto kinds = models_for(model);
      std::string content;
      if (format == "csv")
        content = spectrum_csv(j, kinds);
      else if (format == "json")
        content = spectrum_json(j, kinds);
      else
        content = spectrum_svg(j, kinds);
      return write_output(content, output, out, err);
    }

    if (wavefunction->parsed()) {
      for (int n : ns)
        if (n < 0 || n > 2 * j) {
          err << "error: state index n=" << n << " out of range 0.." << 2 * j << "\n";
          return 2;
        }
      const OscillatorModel osc{algebra::RepLabel(j)};
      const Picture pic = (picture == "position") ? Picture::position : Picture::momentum;
      const auto tables = select_tables(osc, pic, ns);
      std::string content;
      if (format == "csv")
        content = wavefunction_csv(tables);
      else if (format == "json")
        content = wavefunction_json(j, pic, tables);
      else
        content = wavefunction_svg(j, tables);
      return write_output(content, output, out, err);
    }

    if (transform->parsed()) {
      if (format == "svg") {
        err << "error: svg output is only available for spectrum and wavefunction\n";
        return 2;
      }
      const OscillatorModel osc{algebra::RepLabel(j)};
      const auto k = osc.cp_transform();
      // unitarity gate before emission
      const auto id = numerics::to_complex(numerics::Matrix::identity(k.rows()));
      const double res = numerics::max_abs(numerics::matmul(numerics::conjugate_transpose(k), k) - id);
      if (res >= 1e-12) {
        err << "error: transform failed its unitarity gate (residual " << res << ")\n";
        return 1;
      }
      return write_output(format == "csv" ? transform_csv(k) : transform_json(j, k), output,
                          out, err);
    }

    // verify
    const auto summary = checks::run_all(j_max, exact_j_max, tol, corrupt_mk);
    out << verify_report(summary, j_max, exact_j_max, tol).dump(2) << "\n";
    if (!summary.all_pass) {
      for (const auto& c : summary.results)
        if (!c.pass) err << "FAIL: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                         << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace su2cp::cli
