// Command-line front end. One document on stdout per run, diagnostics on
// stderr. Exit status: 0 ok or certified, 2 inconclusive, 1 error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "rauzy/error.hpp"
#include "rauzy/json.hpp"

using namespace rauzy;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Rational tolerance(const std::string& text) {
  Rational t = parse_rational(text);
  if (t <= 0) fail(ErrorKind::Domain, "tolerance must be positive");
  return t;
}

int report_checks(const Json& doc, bool ok) {
  emit(doc);
  if (!ok) {
    std::cerr << "check failed: see the checks array\n";
    return kError;
  }
  return kOk;
}

// Rows separated by ';', entries by whitespace or commas.
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream all(text);
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    for (char& c : row_text)
      if (c == ',') c = ' ';
    std::istringstream row(row_text);
    std::vector<Integer> row_values;
    std::string word;
    while (row >> word) {
      try {
        row_values.emplace_back(word);
      } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "matrix entry '" + word + "' is not an integer");
      }
    }
    if (!row_values.empty()) rows.push_back(std::move(row_values));
  }
  if (rows.empty()) fail(ErrorKind::Parse, "empty matrix");
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorKind::Parse, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> parse_vector(const std::string& text) {
  std::vector<Integer> out;
  std::string copy = text;
  for (char& c : copy)
    if (c == ',') c = ' ';
  std::istringstream in(copy);
  std::string word;
  while (in >> word) {
    try {
      out.emplace_back(word);
    } catch (const std::invalid_argument&) {
      fail(ErrorKind::Parse, "vector entry '" + word + "' is not an integer");
    }
  }
  return out;
}

std::string csv_decimal(const Rational& q) { return to_decimal(q, 12); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological Rauzy-Veech induction and translation-length bounds"};
  app.require_subcommand(1);

  std::string tol_text = "1e-9";
  std::string reading_text = "paper";
  std::size_t cap = 1'000'000;

  // perm
  auto* perm = app.add_subcommand("perm", "Describe a labeled permutation and its surface");
  std::string perm_text;
  std::size_t perm_central = 0, perm_fg = 0;
  std::string perm_format = "json";
  perm->add_option("--perm", perm_text, "Two-row permutation, e.g. \"A B C / C B A\"");
  perm->add_option("--central", perm_central, "Use the central permutation on n letters");
  perm->add_option("--fg-start", perm_fg, "Use the start of gamma_g for genus g");
  perm->add_option("--format", perm_format)->check(CLI::IsMember({"json", "text"}));

  // move
  auto* move = app.add_subcommand("move", "Apply one move");
  std::string move_perm, move_kind;
  move->add_option("--perm", move_perm)->required();
  move->add_option("--move", move_kind)->required()->check(CLI::IsMember({"t", "b", "f"}));

  // diagram
  auto* diagram = app.add_subcommand("diagram", "Explore a connected component");
  std::size_t diagram_central = 0;
  std::string diagram_seed, diagram_format = "json";
  bool augmented = false;
  diagram->add_option("--central", diagram_central, "Seed with the central permutation on n letters");
  diagram->add_option("--seed", diagram_seed, "Seed permutation");
  diagram->add_flag("--augmented", augmented, "Include flip edges");
  diagram->add_option("--format", diagram_format)->check(CLI::IsMember({"json", "dot"}));
  diagram->add_option("--cap", cap, "Vertex cap");

  // path
  auto* path = app.add_subcommand("path", "Walk a move word and test whether it is allowed");
  std::string path_start, path_moves;
  path->add_option("--start", path_start)->required();
  path->add_option("--moves", path_moves)->required();
  path->add_option("--reading", reading_text, "paper (right to left) or ltr");

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Certificate for an allowed path");
  std::string cert_start, cert_moves, lower_mode_text = "exact";
  certify_cmd->add_option("--start", cert_start)->required();
  certify_cmd->add_option("--moves", cert_moves)->required();
  certify_cmd->add_option("--reading", reading_text, "paper (right to left) or ltr");
  certify_cmd->add_option("--tol", tol_text, "Bracket width for lambda");
  certify_cmd->add_option("--lower-mode", lower_mode_text, "exact or paper_cap");

  // fg
  auto* fg = app.add_subcommand("fg", "The f_g family");
  std::size_t genus = 0;
  fg->add_option("--genus", genus);
  fg->add_option("--tol", tol_text);
  auto* fg_table = fg->add_subcommand("table", "CSV over a range of genera");
  std::size_t gmin = 2, gmax = 10;
  fg_table->add_option("--gmin", gmin);
  fg_table->add_option("--gmax", gmax);
  fg_table->add_option("--tol", tol_text);

  // central component
  auto* central_cmd = app.add_subcommand("central", "Structural checks on the central component");
  std::size_t central_n = 0;
  CentralOptions central_options;
  central_cmd->add_option("--n", central_n)->required();
  central_cmd->add_option("--samples", central_options.samples_per_family, "Sampled paths per family");
  central_cmd->add_option("--max-length", central_options.max_length, "Longest sampled path (default 2n)");
  central_cmd->add_option("--max-attempts", central_options.max_attempts, "Sampling attempts per family");
  central_cmd->add_option("--seed", central_options.seed);
  central_cmd->add_option("--cap", central_options.cap);

  // penner
  auto* penner = app.add_subcommand("penner", "The Penner-type family M_n");
  std::size_t penner_g = 0;
  std::string penner_n;
  penner->add_option("--genus", penner_g);
  penner->add_option("--n", penner_n);
  penner->add_option("--tol", tol_text);
  auto* sweep = penner->add_subcommand("sweep", "CSV over genus and n");
  std::size_t sweep_gmax = 6, sweep_nmax = 20;
  sweep->add_option("--gmax", sweep_gmax);
  sweep->add_option("--nmax", sweep_nmax);
  sweep->add_option("--tol", tol_text);
  auto* hg = penner->add_subcommand("hg", "n = g^g member of the family");
  hg->add_option("--genus", penner_g)->required();
  hg->add_option("--tol", tol_text);

  // homology-check
  auto* homology = app.add_subcommand("homology-check", "Power identity for [[1, b], [0, A]]");
  std::string matrix_text, vector_text;
  unsigned long homology_n = 1;
  homology->add_option("--matrix", matrix_text, "Rows separated by ';'")->required();
  homology->add_option("--b", vector_text, "Row vector")->required();
  homology->add_option("--n", homology_n)->required();

  // fg-start
  auto* fg_start_cmd = app.add_subcommand("fg-start", "Print the start permutation of gamma_g");
  std::size_t fg_start_g = 0;
  fg_start_cmd->add_option("genus", fg_start_g)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kError;
  }

  try {
    const Reading reading = parse_reading(reading_text);

    if (*perm) {
      const int given = !perm_text.empty() + (perm_central > 0) + (perm_fg > 0);
      if (given != 1) fail(ErrorKind::Parse, "give exactly one of --perm, --central, --fg-start");
      const LabeledPermutation p = !perm_text.empty() ? parse_permutation(perm_text)
                                   : perm_central     ? central(perm_central)
                                                      : fg_start(perm_fg);
      if (perm_format == "text") {
        std::cout << p.display_rows() << "\n";
        return kOk;
      }
      const GluedSurface s = glue(p);
      if (!s.from_irreducible) std::cerr << "warning: reducible permutation\n";
      Json j{{"permutation", to_json(p)},
             {"display", p.display()},
             {"unlabeled", unlabeled(p).images},
             {"irreducible", is_irreducible(p)},
             {"surface", surface_json(p, s)},
             {"homology_rank", homology_rank(s)}};
      if (perm_central) {
        const StratumLabel st = stratum_of_central(perm_central);
        j["stratum"] = Json{{"label", st.label}, {"genus", st.genus}, {"torus_warning", st.torus_warning}};
      }
      emit(j);
      return kOk;
    }

    if (*move) {
      const LabeledPermutation p = parse_permutation(move_perm);
      emit(to_json(apply_move(p, move_from_char(move_kind[0]))));
      return kOk;
    }

    if (*diagram) {
      if ((diagram_central > 0) == !diagram_seed.empty())
        fail(ErrorKind::Parse, "give exactly one of --central, --seed");
      const LabeledPermutation seed = diagram_central ? central(diagram_central) : parse_permutation(diagram_seed);
      const RauzyDiagram d = RauzyDiagram::explore(seed, augmented, cap);
      if (diagram_format == "dot")
        std::cout << to_dot(d);
      else
        emit(to_json(d));
      return kOk;
    }

    if (*path) {
      const AllowedPath p = build_path(parse_permutation(path_start), path_moves, reading);
      Json j = to_json(p);
      j["reading"] = reading_text;
      emit(j);
      if (!p.allowed()) {
        std::cerr << error_prefix(ErrorKind::NotAllowed) << ": endpoints " << p.start().display() << " and "
                  << p.end().display() << " differ as unlabeled permutations\n";
        return kError;
      }
      return kOk;
    }

    if (*certify_cmd) {
      const AllowedPath p = build_path(parse_permutation(cert_start), cert_moves, reading);
      const PACertificate c = certify(p, tolerance(tol_text), parse_lower_mode(lower_mode_text));
      Json j = to_json(c);
      j["reading"] = reading_text;
      emit(j);
      for (const auto& w : c.warnings) std::cerr << "warning: " << w << "\n";
      return c.pseudo_anosov() ? kOk : kInconclusive;
    }

    if (*fg_table) {
      const Rational tol = tolerance(tol_text);
      std::cout << "g,lambda_low,lambda_high,lc_upper,lc_lower_paper,lc_lower_exact\n";
      bool ok = true;
      for (std::size_t g = gmin; g <= gmax; ++g) {
        const FgReport r = theorem11(g, tol);
        ok = ok && r.ok();
        const auto& c = r.certificate;
        std::cout << g << "," << csv_decimal(c.lambda->low) << "," << csv_decimal(c.lambda->high) << ","
                  << csv_decimal(c.lc_upper->value) << "," << csv_decimal(r.lower_paper->value) << ","
                  << csv_decimal(r.lower_exact->value) << "\n";
      }
      if (!ok) {
        std::cerr << "check failed: run fg --genus G for details\n";
        return kError;
      }
      return kOk;
    }

    if (*fg) {
      if (genus == 0) fail(ErrorKind::Parse, "fg needs --genus (or the table subcommand)");
      const FgReport r = theorem11(genus, tolerance(tol_text));
      return report_checks(to_json(r), r.ok());
    }

    if (*central_cmd) {
      const CentralReport r = theorem12_checks(central_n, central_options);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
      return report_checks(to_json(r), r.ok());
    }

    if (*sweep) {
      const Rational tol = tolerance(tol_text);
      std::cout << "g,n,rho_low,rho_high,min_row_sum_power,lc_upper\n";
      bool ok = true;
      for (std::size_t g = 3; g <= sweep_gmax; ++g) {
        const Rational upper = lc_upper_rotation(g).value;
        for (std::size_t n = 1; n <= sweep_nmax; ++n) {
          const StretchReport r = stretch_bounds(g, Integer(static_cast<unsigned long>(n)), tol, tol);
          ok = ok && r.ok();
          std::cout << g << "," << n << "," << csv_decimal(r.rho.low) << "," << csv_decimal(r.rho.high) << ","
                    << r.min_row_sum_power.get_str() << "," << csv_decimal(upper) << "\n";
        }
      }
      if (!ok) {
        std::cerr << "check failed: run penner --genus G --n N for details\n";
        return kError;
      }
      return kOk;
    }

    if (*hg) {
      const HgReport r = hg_sequence(penner_g, tolerance(tol_text));
      return report_checks(to_json(r), r.ok());
    }

    if (*penner) {
      if (penner_g == 0 || penner_n.empty()) fail(ErrorKind::Parse, "penner needs --genus and --n");
      Integer n;
      try {
        n = Integer(penner_n);
      } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "--n must be an integer");
      }
      const Rational tol = tolerance(tol_text);
      const StretchReport r = stretch_bounds(penner_g, n, tol, tol);
      Json j = to_json(r);
      j["power_identity"] = verify_power_identity(penner_g, n);
      j["rotation"] = to_json(lc_upper_rotation(penner_g));
      const bool ok = r.ok() && j["power_identity"].get<bool>();
      return report_checks(j, ok);
    }

    if (*homology) {
      const IntMatrix a = parse_matrix(matrix_text);
      const std::vector<Integer> b = parse_vector(vector_text);
      const bool ok = homology_power_check(a, b, homology_n);
      Json j{{"n", homology_n},
             {"power", to_json(power(homology_block(a, b), homology_n))},
             {"closed_form", to_json(homology_closed_form(a, b, homology_n))},
             {"equal", ok}};
      return report_checks(j, ok);
    }

    if (*fg_start_cmd) {
      std::cout << fg_start(fg_start_g).display() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << error_prefix(e.kind()) << ": " << e.what() << "\n";
    return kError;
  }
  return kError;
}
