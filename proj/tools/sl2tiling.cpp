#include "sl2t/descent.hpp"
#include "sl2t/document.hpp"
#include "sl2t/engine.hpp"
#include "sl2t/fibonacci.hpp"
#include "sl2t/frontier.hpp"
#include "sl2t/signatures.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sl2t;
using ordered_json = nlohmann::ordered_json;

// Exit codes are stable: 0 success / property holds, 1 property fails or
// violations found, 2 usage or format error.
constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsageError = 2;

int exit_code_for(errc code) {
  switch (code) {
    case errc::not_admissible:
    case errc::non_integer_division:
    case errc::non_positive_entry:
    case errc::unreachable_cell:
    case errc::scan_inconclusive:
    case errc::slices_not_constant:
    case errc::wrong_signature:
      return kPropertyFailed;
    default:
      return kUsageError;
  }
}

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

std::pair<Coord, Coord> parse_range(const std::string& text) {
  const auto sep = text.find("..", 1);  // skip a leading minus sign
  if (sep == std::string::npos)
    fail(errc::bad_format, "range must look like lo..hi, got '" + text + "'");
  try {
    Coord lo = std::stoll(text.substr(0, sep));
    Coord hi = std::stoll(text.substr(sep + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    fail(errc::bad_format, "bad range '" + text + "'");
  }
}

Window window_from_ranges(std::size_t n, const std::vector<std::string>& ranges) {
  if (ranges.size() != n)
    fail(errc::bad_format, "expected " + std::to_string(n) + " window ranges, got " +
                               std::to_string(ranges.size()));
  LatticePoint lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto [a, b] = parse_range(ranges[k]);
    lo[k] = a;
    hi[k] = b;
  }
  return Window(std::move(lo), std::move(hi));
}

SignatureMatrix epsilon_from_spec(std::size_t n, bool anti, const std::string& eps_list) {
  if (anti && !eps_list.empty())
    fail(errc::bad_format, "--anti and --eps are mutually exclusive");
  if (anti) return SignatureMatrix::all_anti(n);
  if (eps_list.empty()) fail(errc::bad_format, "need --anti or --eps");
  std::vector<int> signs;
  std::stringstream stream(eps_list);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token == "+" || token == "+1")
      signs.push_back(1);
    else if (token == "-" || token == "-1")
      signs.push_back(-1);
    else
      fail(errc::bad_format, "bad sign token '" + token + "'");
  }
  return SignatureMatrix::from_upper_triangle(n, signs);
}

ordered_json epsilon_to_json(const SignatureMatrix& eps) {
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < eps.dimension(); ++k) {
    ordered_json row = ordered_json::array();
    for (std::size_t l = 0; l < eps.dimension(); ++l) row.push_back(eps.at(k, l));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string epsilon_to_text(const SignatureMatrix& eps, const std::string& indent) {
  std::ostringstream out;
  for (std::size_t k = 0; k < eps.dimension(); ++k) {
    out << indent;
    for (std::size_t l = 0; l < eps.dimension(); ++l) {
      if (l > 0) out << ' ';
      out << (eps.at(k, l) > 0 ? "+1" : "-1");
    }
    out << '\n';
  }
  return out.str();
}

// Rows top-to-bottom by decreasing first coordinate, columns right-aligned.
std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_plane(const TilingWindow& t) {
  std::vector<std::vector<std::string>> rows;
  for (Coord i = t.window().hi()[0]; i >= t.window().lo()[0]; --i) {
    std::vector<std::string> row;
    for (Coord j = t.window().lo()[1]; j <= t.window().hi()[1]; ++j)
      row.push_back(to_decimal(t.at({i, j})));
    rows.push_back(std::move(row));
  }
  return render_rows(rows);
}

std::string render_completion(const Completion& c) {
  const Window& box = c.bounding_box();
  std::vector<std::vector<std::string>> rows;
  for (Coord i = box.hi()[0]; i >= box.lo()[0]; --i) {
    std::vector<std::string> row;
    for (Coord j = box.lo()[1]; j <= box.hi()[1]; ++j)
      row.push_back(c.determined({i, j}) ? to_decimal(c.at({i, j})) : ".");
    rows.push_back(std::move(row));
  }
  return render_rows(rows);
}

void print_violations_text(const ViolationReport& report, const std::string& label) {
  std::cout << label << ": " << report.size()
            << (report.size() == 1 ? " violation" : " violations") << "\n";
  for (const Violation& v : report.violations) {
    std::cout << "  at (";
    for (std::size_t k = 0; k < v.base.size(); ++k)
      std::cout << (k ? "," : "") << v.base[k];
    std::cout << ") axes (" << v.axis_k + 1 << "," << v.axis_l + 1
              << "): computed " << to_decimal(v.computed) << ", expected "
              << v.expected << "\n";
  }
}

ordered_json violations_to_json(const ViolationReport& report) {
  ordered_json arr = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["base"] = v.base;
    item["axes"] = {v.axis_k + 1, v.axis_l + 1};
    item["computed"] = to_decimal(v.computed);
    item["expected"] = v.expected;
    arr.push_back(std::move(item));
  }
  return arr;
}

// ---------------------------------------------------------------- classify

int run_classify(std::size_t n, const GlobalFlags& flags) {
  std::vector<SignatureMatrix> admissible = enumerate_admissible(n);
  const std::size_t expected = std::size_t{1} << (n - 1);

  std::string cross_check = "skipped (n > 7)";
  bool cross_check_ok = true;
  if (n <= 7) {
    cross_check_ok = orbit_of_anti(n) == admissible;
    cross_check = cross_check_ok ? "pass" : "FAIL";
  }
  const bool ok = cross_check_ok && admissible.size() == expected;

  if (flags.json) {
    ordered_json doc;
    doc["n"] = n;
    doc["count"] = admissible.size();
    doc["expected_count"] = expected;
    doc["orbit_cross_check"] = cross_check;
    if (!flags.quiet) {
      ordered_json list = ordered_json::array();
      for (const SignatureMatrix& eps : admissible) {
        ordered_json item;
        item["epsilon"] = epsilon_to_json(eps);
        ordered_json signs = ordered_json::array();
        for (std::int8_t s : signature_to_signs(eps).first.signs())
          signs.push_back(static_cast<int>(s));
        item["signs"] = std::move(signs);
        list.push_back(std::move(item));
      }
      doc["matrices"] = std::move(list);
    }
    std::cout << doc.dump() << "\n";
    return ok ? kOk : kPropertyFailed;
  }

  if (!flags.quiet) {
    std::size_t index = 1;
    for (const SignatureMatrix& eps : admissible) {
      std::cout << "matrix " << index++ << ":\n" << epsilon_to_text(eps, "  ");
      std::cout << "  signs:";
      for (std::int8_t s : signature_to_signs(eps).first.signs())
        std::cout << ' ' << (s > 0 ? "+1" : "-1");
      std::cout << "\n";
    }
  }
  std::cout << "admissible signature matrices for n = " << n << ": "
            << admissible.size() << " = 2^" << (n - 1) << "\n";
  std::cout << "orbit cross-check: " << cross_check << "\n";
  return ok ? kOk : kPropertyFailed;
}

// ------------------------------------------------------------------- build

int run_build(std::size_t n, bool anti, const std::string& eps_list,
              const std::vector<std::string>& ranges, Coord translation,
              const std::string& output, const GlobalFlags& flags) {
  SignatureMatrix eps = epsilon_from_spec(n, anti, eps_list);
  Window window = window_from_ranges(n, ranges);
  TilingWindow tiling = build_tiling(eps, window, translation);
  ViolationReport report = verify_window(tiling);

  if (!output.empty()) write_document(tiling, output);

  if (flags.json) {
    ordered_json doc;
    doc["n"] = n;
    doc["epsilon"] = epsilon_to_json(eps);
    doc["translation"] = translation;
    doc["cells"] = tiling.window().cell_count();
    doc["violations"] = report.size();
    if (!output.empty()) doc["output"] = output;
    std::cout << doc.dump() << "\n";
  } else if (output.empty()) {
    std::cout << to_document(tiling);
    if (!flags.quiet)
      std::cerr << "verification: " << report.size() << " violations\n";
  } else {
    if (!flags.quiet) {
      std::cout << "wrote " << tiling.window().cell_count() << " cells to "
                << output << "\n";
      std::cout << "verification: " << report.size() << " violations\n";
    }
  }
  return report.empty() ? kOk : kPropertyFailed;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& path, bool diagonal, bool slices,
               const GlobalFlags& flags) {
  TilingWindow tiling = read_document(path);
  ViolationReport square_report = verify_window(tiling);
  std::optional<ViolationReport> diagonal_report;
  if (diagonal) diagonal_report = verify_diagonal_relation(tiling);
  std::optional<bool> slices_constant;
  if (slices) slices_constant = check_constant_slices(tiling);

  bool clean = square_report.empty();
  if (diagonal_report && !diagonal_report->empty()) clean = false;
  if (slices_constant && !*slices_constant) clean = false;

  if (flags.json) {
    ordered_json doc;
    doc["path"] = path;
    doc["violations"] = violations_to_json(square_report);
    if (diagonal_report)
      doc["diagonal_violations"] = violations_to_json(*diagonal_report);
    if (slices_constant) doc["slices_constant"] = *slices_constant;
    doc["clean"] = clean;
    std::cout << doc.dump() << "\n";
  } else {
    print_violations_text(square_report, "unit squares");
    if (diagonal_report) print_violations_text(*diagonal_report, "diagonal relation");
    if (slices_constant)
      std::cout << "slices: " << (*slices_constant ? "constant" : "NOT constant") << "\n";
    std::cout << (clean ? "clean\n" : "violations found\n");
  }
  return clean ? kOk : kPropertyFailed;
}

// --------------------------------------------------------------- staircase

int run_staircase(Coord rows, Coord cols, const GlobalFlags& flags) {
  if (rows < 1 || cols < 1) fail(errc::bad_format, "rows and cols must be >= 1");
  TilingWindow plane = staircase_plane(Window({1 - rows, 0}, {0, cols - 1}));
  if (flags.json) {
    ordered_json doc;
    doc["rows"] = rows;
    doc["cols"] = cols;
    ordered_json grid = ordered_json::array();
    for (Coord i = 0; i >= 1 - rows; --i) {
      ordered_json row = ordered_json::array();
      for (Coord j = 0; j <= cols - 1; ++j) row.push_back(to_decimal(plane.at({i, j})));
      grid.push_back(std::move(row));
    }
    doc["grid"] = std::move(grid);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << render_plane(plane);
  }
  return kOk;
}

// ---------------------------------------------------------------- frontier

int run_frontier(const std::string& text, int depth, int sign,
                 const std::string& output, const GlobalFlags& flags) {
  Frontier frontier = parse_frontier(text);
  const int effective_depth =
      depth > 0 ? depth : static_cast<int>(frontier.steps.size()) + 1;
  Completion completion = complete_frontier(frontier, effective_depth, sign);
  ViolationReport report = completion.verify();

  if (!output.empty()) write_document(completion.window(), output);

  if (flags.json) {
    ordered_json doc;
    doc["frontier"] = frontier_to_string(frontier);
    doc["sign"] = sign;
    doc["depth"] = effective_depth;
    doc["lo"] = completion.bounding_box().lo();
    doc["hi"] = completion.bounding_box().hi();
    ordered_json cells = ordered_json::array();
    for (const auto& [p, value] : completion.cells()) {
      ordered_json cell;
      cell["at"] = p;
      cell["value"] = to_decimal(value);
      cells.push_back(std::move(cell));
    }
    doc["cells"] = std::move(cells);
    doc["violations"] = violations_to_json(report);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << render_completion(completion);
    if (!flags.quiet)
      std::cout << "determined " << completion.cells().size() << " cells, "
                << report.size() << " violations\n";
  }
  return report.empty() ? kOk : kPropertyFailed;
}

// -------------------------------------------------------------------- scan

int run_scan(const std::string& mode, int seed_bound, int step_bound,
             const GlobalFlags& flags) {
  if (seed_bound < 1) fail(errc::bad_format, "--B must be >= 1");

  if (mode == "nonexistence") {
    const int steps = step_bound > 0 ? step_bound : seed_bound + 2;
    NonexistenceScan scan = nonexistence_scan(seed_bound, steps, +1);
    const std::size_t total =
        static_cast<std::size_t>(seed_bound) * static_cast<std::size_t>(seed_bound);
    if (flags.json) {
      ordered_json doc;
      doc["mode"] = "nonexistence";
      doc["B"] = seed_bound;
      doc["K"] = steps;
      doc["pass"] = true;
      doc["certified"] = scan.certificates.size();
      doc["total"] = total;
      if (!flags.quiet) {
        ordered_json certs = ordered_json::array();
        for (const DescentCertificate& c : scan.certificates)
          certs.push_back(ordered_json::parse(c.to_json_line()));
        doc["certificates"] = std::move(certs);
      }
      std::cout << doc.dump() << "\n";
    } else {
      if (!flags.quiet)
        for (const DescentCertificate& c : scan.certificates)
          std::cout << c.to_json_line() << "\n";
      std::cout << "PASS: " << scan.certificates.size() << "/" << total
                << " seeds certified (K = " << steps << ")\n";
    }
    return kOk;
  }

  if (mode == "uniqueness") {
    const int steps = step_bound > 0 ? step_bound : 12;
    UniquenessScan scan = uniqueness_scan(seed_bound, steps, -1);
    if (flags.json) {
      ordered_json doc;
      doc["mode"] = "uniqueness";
      doc["B"] = seed_bound;
      doc["K"] = steps;
      doc["pass"] = scan.matches_expected;
      ordered_json survivors = ordered_json::array();
      for (const Seed& s : scan.survivors) survivors.push_back({s.first, s.second});
      doc["survivors"] = std::move(survivors);
      ordered_json expected = ordered_json::array();
      for (const Seed& s : scan.expected_survivors)
        expected.push_back({s.first, s.second});
      doc["expected_survivors"] = std::move(expected);
      if (!flags.quiet) {
        ordered_json certs = ordered_json::array();
        for (const DescentCertificate& c : scan.certificates)
          certs.push_back(ordered_json::parse(c.to_json_line()));
        doc["certificates"] = std::move(certs);
      }
      std::cout << doc.dump() << "\n";
    } else {
      if (!flags.quiet)
        for (const DescentCertificate& c : scan.certificates)
          std::cout << c.to_json_line() << "\n";
      std::cout << "survivors:";
      for (const Seed& s : scan.survivors)
        std::cout << " (" << s.first << "," << s.second << ")";
      std::cout << "\n";
      std::cout << (scan.matches_expected
                        ? "PASS: survivors are exactly the staircase-adjacent pairs"
                        : "FAIL: survivor set differs from staircase-adjacent pairs")
                << " (" << scan.survivors.size() << " seeds)\n";
    }
    return scan.matches_expected ? kOk : kPropertyFailed;
  }

  fail(errc::bad_format, "scan mode must be nonexistence or uniqueness");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for signature SL2-tilings of Z^n:\n"
               "classification of signature matrices, construction and\n"
               "verification of tilings on finite windows, frontier completion\n"
               "in the plane, and descent scans over slice recurrences."};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "machine-readable JSON output");
  app.add_flag("--quiet", flags.quiet, "suppress listings, print summaries only");

  auto* classify = app.add_subcommand(
      "classify", "List the admissible signature matrices for dimension n");
  std::size_t classify_n = 0;
  classify->add_option("n", classify_n, "dimension (2..16)")->required();
  classify->fallthrough();

  auto* build = app.add_subcommand(
      "build", "Construct the tiling for an admissible signature on a window");
  std::size_t build_n = 0;
  bool build_anti = false;
  std::string build_eps;
  std::vector<std::string> build_ranges;
  Coord build_translation = 0;
  std::string build_output;
  build->add_option("n", build_n, "dimension (>= 3)")->required();
  build->add_flag("--anti", build_anti, "all off-diagonal signs -1");
  build->add_option("--eps", build_eps,
                    "strict upper triangle, row-major, e.g. +,+,- for n=3");
  build->add_option("--window", build_ranges, "per-axis inclusive range lo..hi")
      ->expected(-1);
  build->add_option("--translation", build_translation,
                    "diagonal offset of the staircase profile (default 0)");
  build->add_option("-o,--output", build_output, "write the tiling document here");
  build->fallthrough();

  auto* verify = app.add_subcommand("verify", "Check a tiling document");
  std::string verify_path;
  bool verify_diagonal = false;
  bool verify_slices = false;
  verify->add_option("path", verify_path, "tiling document")->required();
  verify->add_flag("--diagonal", verify_diagonal, "also check the diagonal relation");
  verify->add_flag("--slices", verify_slices, "also check constant slices");
  verify->fallthrough();

  auto* staircase = app.add_subcommand(
      "staircase", "Print the staircase plane anchored at (0,0)");
  Coord staircase_rows = 0;
  Coord staircase_cols = 0;
  staircase->add_option("rows", staircase_rows, "row count")->required();
  staircase->add_option("cols", staircase_cols, "column count")->required();
  staircase->fallthrough();

  auto* frontier = app.add_subcommand(
      "frontier", "Complete a staircase frontier of 1's in the plane");
  std::string frontier_text;
  int frontier_depth = 0;
  int frontier_sign = -1;
  std::string frontier_output;
  frontier->add_option("frontier", frontier_text, "path text, e.g. \"@(0,0) RDRD\"")
      ->required();
  frontier->add_option("--depth", frontier_depth,
                       "propagation rounds (default: step count + 1)");
  frontier->add_option("--sign", frontier_sign, "-1 or +1 (default -1)");
  frontier->add_option("-o,--output", frontier_output,
                       "write the full bounding-box window here");
  frontier->fallthrough();

  auto* scan = app.add_subcommand(
      "scan", "Seed scans over the slice recurrence c_{r+1} c_{r-1} = c_r^2 - sign");
  std::string scan_mode;
  int scan_B = 200;
  int scan_K = 0;
  scan->add_option("mode", scan_mode, "nonexistence | uniqueness")->required();
  scan->add_option("--B", scan_B, "seed bound, seeds are [1,B]^2 (default 200)");
  scan->add_option("--K", scan_K,
                   "step bound per direction (default: B + 2 for nonexistence,"
                   " enough because once the seed pair stops increasing the"
                   " descent drops the minimum by at least 1 per step;"
                   " 12 for uniqueness)");
  scan->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*classify) {
      if (classify_n < 2 || classify_n > kMaxEnumerationDimension)
        fail(errc::bad_format, "n must be in 2..16");
      return run_classify(classify_n, flags);
    }
    if (*build) {
      if (build_n < 3) fail(errc::bad_format, "build needs n >= 3");
      return run_build(build_n, build_anti, build_eps, build_ranges,
                       build_translation, build_output, flags);
    }
    if (*verify) return run_verify(verify_path, verify_diagonal, verify_slices, flags);
    if (*staircase) return run_staircase(staircase_rows, staircase_cols, flags);
    if (*frontier)
      return run_frontier(frontier_text, frontier_depth, frontier_sign,
                          frontier_output, flags);
    if (*scan) return run_scan(scan_mode, scan_B, scan_K, flags);
  } catch (const tiling_error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
