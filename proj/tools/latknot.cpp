// Command-line front end for the latknot library.
//
// Exit codes: 0 success, 2 a bound check failed, 3 invariant mismatch,
// 4 invalid input, 64 usage error, 1 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "latknot/latknot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBound = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInvalid = 4;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 1;

latknot::Json read_json(const std::string &path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in)
      throw latknot::Error(latknot::ErrorCode::Parse, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return latknot::Json::parse(text);
  } catch (const latknot::Json::exception &e) {
    throw latknot::Error(latknot::ErrorCode::Parse, e.what());
  }
}

void write_file(const std::string &path, const std::string &content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw latknot::Error(latknot::ErrorCode::Parse, "cannot write " + path);
  out << content;
}

void print(const latknot::Json &j) { std::cout << latknot::canonical_dump(j) << '\n'; }

latknot::Json polynomial_json(const latknot::LaurentPolynomial &p, char var = 't') {
  auto j = latknot::to_json(p);
  j["text"] = p.to_string(var);
  return j;
}

int exit_code_for(const latknot::Error &e) {
  using latknot::ErrorCode;
  switch (e.code()) {
  case ErrorCode::InternalInvariant:
  case ErrorCode::NoGenericDirection: return kExitInternal;
  default: return kExitInvalid;
  }
}

} // namespace

int main(int argc, char **argv) {
  using namespace latknot;

  CLI::App app{"Lattice stick polygons from arc presentations"};
  app.require_subcommand(1);

  std::string input;
  int rotate_pages_by = 0, rotate_bindings_by = 0;
  std::string branch = "auto";
  bool with_jones = false, with_pd = false;
  int crossing_number = 0;
  bool non_alt_prime = false, skip_invariant = false;
  std::string svg_out, obj_out;
  std::string dataset_name;
  int random_arcs = 7;
  std::uint64_t seed = 1;

  auto *validate_cmd = app.add_subcommand("validate", "check a presentation and print it canonically");
  validate_cmd->add_option("file", input, "presentation JSON, - for stdin")->required();

  auto *dual_cmd = app.add_subcommand("dual", "print the dual presentation");
  dual_cmd->add_option("file", input)->required();

  auto *rotate_cmd = app.add_subcommand("rotate", "rotate page numbers or binding indices");
  auto *pages_opt = rotate_cmd->add_option("--pages", rotate_pages_by, "turn the book by m pages");
  auto *bindings_opt = rotate_cmd->add_option("--bindings", rotate_bindings_by, "shift binding indices by m");
  pages_opt->excludes(bindings_opt);
  rotate_cmd->add_option("file", input)->required();

  auto *star_cmd = app.add_subcommand("star", "star shape, torus order and non-star witness");
  star_cmd->add_option("file", input)->required();

  auto *build_cmd = app.add_subcommand("build", "build a lattice polygon");
  build_cmd->add_option("file", input)->required();
  build_cmd->add_option("--branch", branch)->check(CLI::IsMember({"auto", "basic", "reduced", "nonstar"}));

  auto *invariant_cmd = app.add_subcommand("invariant", "Alexander polynomial and determinant");
  invariant_cmd->add_option("file", input, "presentation or polygon JSON")->required();
  invariant_cmd->add_flag("--jones", with_jones, "also compute the Kauffman-bracket Jones polynomial");
  invariant_cmd->add_flag("--pd", with_pd, "include the PD code");

  auto *certify_cmd = app.add_subcommand("certify", "run the pipeline and check stick-number bounds");
  certify_cmd->add_option("file", input)->required();
  certify_cmd->add_option("--c", crossing_number, "crossing number of the knot")->required()->check(CLI::PositiveNumber);
  certify_cmd->add_flag("--non-alternating-prime", non_alt_prime);
  certify_cmd->add_flag("--skip-invariant", skip_invariant);

  auto *render_cmd = app.add_subcommand("render", "export a polygon as SVG or OBJ");
  render_cmd->add_option("polygon", input)->required();
  auto *svg_opt = render_cmd->add_option("--svg", svg_out, "SVG output path");
  auto *obj_opt = render_cmd->add_option("--obj", obj_out, "OBJ output path");
  svg_opt->excludes(obj_opt);

  auto *dataset_cmd = app.add_subcommand("dataset", "bundled knot presentations");
  dataset_cmd->require_subcommand(1);
  auto *dataset_list = dataset_cmd->add_subcommand("list", "list bundled knots");
  auto *dataset_get = dataset_cmd->add_subcommand("get", "print a bundled presentation");
  dataset_get->add_option("name", dataset_name)->required();

  auto *random_cmd = app.add_subcommand("random", "print a seeded random presentation");
  random_cmd->add_option("--arcs", random_arcs)->check(CLI::Range(2, kMaxPipelineArcs));
  random_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }
  if (*rotate_cmd && pages_opt->count() + bindings_opt->count() != 1) {
    std::cerr << "rotate: give exactly one of --pages or --bindings\n";
    return kExitUsage;
  }
  if (*render_cmd && svg_opt->count() + obj_opt->count() != 1) {
    std::cerr << "render: give exactly one of --svg or --obj\n";
    return kExitUsage;
  }

  try {
    if (*validate_cmd) {
      print(to_json(presentation_from_json(read_json(input))));
    } else if (*dual_cmd) {
      print(to_json(dual(presentation_from_json(read_json(input)))));
    } else if (*rotate_cmd) {
      const auto P = presentation_from_json(read_json(input));
      print(to_json(pages_opt->count() ? rotate_pages(P, rotate_pages_by) : rotate_bindings(P, rotate_bindings_by)));
    } else if (*star_cmd) {
      const auto P = presentation_from_json(read_json(input));
      Json out{{"a", P.size()}, {"star_shaped", is_star_shaped(P)}, {"torus", nullptr}, {"witness", nullptr}};
      if (is_star_shaped(P)) {
        if (const auto t = torus_order_check(P))
          out["torus"] = {{"n", t->n},
                          {"direction", t->direction == TorusDirection::InOrder ? "in-order" : "reverse-order"},
                          {"rotation_offset", t->rotation_offset},
                          {"type", {t->n + 1, t->n}}};
      } else if (P.size() >= kMinPipelineArcs) {
        if (const auto w = find_nonstar_witness(P))
          out["witness"] = {{"beta", w->beta_raw},
                            {"alpha", w->alpha_raw},
                            {"gamma", w->gamma_raw},
                            {"pages", {w->page_low, w->page_high}}};
      }
      print(out);
    } else if (*build_cmd) {
      const auto P = presentation_from_json(read_json(input));
      LatticePolygon poly;
      if (branch == "auto")
        poly = construct_auto(P, {.check_invariant = false}).polygon;
      else if (branch == "basic")
        poly = construct_basic(P);
      else if (branch == "reduced")
        poly = reduce_ends(construct_basic(P), P);
      else if (is_star_shaped(P))
        throw Error(ErrorCode::NotStarShaped, "--branch nonstar needs a non-star presentation");
      else
        poly = build_nonstar(P);
      print(to_json(poly));
    } else if (*invariant_cmd) {
      const Json j = read_json(input);
      PlanarDiagram d;
      Json out;
      if (j.contains("sticks")) {
        const auto poly = polygon_from_json(j);
        detail::require_valid(poly, "input polygon");
        d = project_polygon(poly);
        out["kind"] = "polygon";
        out["sticks"] = stick_count(poly);
      } else {
        d = arc_to_planar(presentation_from_json(j));
        out["kind"] = "presentation";
      }
      out["crossings"] = d.crossing_count();
      out["alexander"] = polynomial_json(alexander(d));
      out["determinant"] = determinant(d);
      if (with_jones)
        out["jones_kauffman"] = polynomial_json(jones_kauffman(d), 'A');
      if (with_pd)
        out["pd"] = pd_code(d);
      print(out);
    } else if (*certify_cmd) {
      const auto P = presentation_from_json(read_json(input));
      auto result = construct_auto(P, {.check_invariant = !skip_invariant});
      KnotFlags flags;
      flags.non_alternating_prime = non_alt_prime;
      flags.prime = non_alt_prime;
      const auto cert = check_bounds(result.certificate, crossing_number, flags);
      print(to_json(cert));
      if (cert.invariant_match == InvariantMatch::Mismatched)
        return kExitMismatch;
      return cert.bound_failed() ? kExitBound : kExitOk;
    } else if (*render_cmd) {
      const auto poly = polygon_from_json(read_json(input));
      detail::require_valid(poly, "input polygon");
      if (svg_opt->count())
        write_file(svg_out, render_svg(poly));
      else
        write_file(obj_out, render_obj(poly));
    } else if (*dataset_cmd) {
      if (*dataset_list) {
        for (const auto &e : dataset())
          std::cout << e.name << " a=" << e.arcs.size() << " c=" << e.crossing_number
                    << (e.flags.alternating ? " alternating" : " non-alternating") << '\n';
      } else {
        const auto e = find_dataset_entry(dataset_name);
        if (!e) {
          std::cerr << "unknown knot " << dataset_name << '\n';
          return kExitInvalid;
        }
        print(to_json(e->arcs));
      }
    } else if (*random_cmd) {
      std::mt19937_64 rng(seed);
      print(to_json(random_presentation(random_arcs, rng)));
    }
  } catch (const Error &e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
