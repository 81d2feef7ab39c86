#include "coxhull/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "coxhull/convexity.hpp"
#include "coxhull/error.hpp"
#include "coxhull/formulas.hpp"
#include "coxhull/polyverify.hpp"
#include "coxhull/svg.hpp"

namespace coxhull {

namespace {

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(part, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size())
      throw Error(ErrorKind::ParseError, std::string(flag) + ": '" + part + "' is not an integer");
  }
  if (out.size() != expected)
    throw Error(ErrorKind::ParseError, std::string(flag) + " expects " + std::to_string(expected) +
                                           " comma-separated integers, got '" + text + "'");
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupContext group_for(const RunConfig& config) {
  if (!config.matrix_json) return build_group(config.type);
  std::string text = *config.matrix_json;
  if (text.find_first_of("[{") == std::string::npos) text = read_text(text);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("matrix JSON: ") + e.what());
  }
  return build_group(matrix_from_json(j));
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::size_t enumerate(const Tessellation& t, std::initializer_list<Chamber> points) {
  std::vector<Chamber> pts(points);
  return halfspace_hull_size(t, pts);
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.radius < 0) throw Error(ErrorKind::ConfigError, "radius must be >= 0");
  if (config.radius_cap < 0) throw Error(ErrorKind::ConfigError, "radius cap must be >= 0");
  if (config.radius > config.radius_cap)
    throw Error(ErrorKind::ConfigError, "radius " + std::to_string(config.radius) + " exceeds the cap " +
                                            std::to_string(config.radius_cap) + " (raise it with --radius-cap)");
  if (config.jobs < 1) throw Error(ErrorKind::ConfigError, "jobs must be >= 1");
  if (config.cross_checks < 0) throw Error(ErrorKind::ConfigError, "cross-check count must be >= 0");
  if (!config.matrix_json && config.type == TypeTag::Unsupported)
    throw Error(ErrorKind::ConfigError, "unsupported type");
  if (config.report_path) {
    const auto dir = std::filesystem::absolute(*config.report_path).parent_path();
    if (!std::filesystem::is_directory(dir))
      throw Error(ErrorKind::ConfigError, "report directory " + dir.string() + " does not exist");
  }
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw Error(ErrorKind::IoError, "short write to " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error(ErrorKind::IoError, "cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  validate(config);
  const Tessellation t(group_for(config));

  // Guard the production hull with the interval-closure oracle on a seeded
  // sample before trusting it for the sweep.
  const std::vector<Chamber> ball = t.ball(config.radius);
  const Chamber u = t.chamber_of_identity();
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < config.cross_checks; ++i) {
    const Chamber pts[] = {u, ball[pick(rng)], ball[pick(rng)]};
    cross_checked_hull(t, pts);
  }

  CheckReport report = sweep_triples(t, config.radius, config.jobs);
  if (!config.timing) report.wall_clock_ms = 0;
  const std::string json = report.to_json().dump(2) + "\n";
  if (config.report_path) write_atomically(*config.report_path, json);

  out << tag_name(report.type) << " radius " << report.radius << ": " << report.triples_checked << " triples, "
      << report.counterexamples.size() << " counterexamples, max ratio " << report.max_ratio.num << '/'
      << report.max_ratio.den << ", " << config.cross_checks << " oracle cross-checks\n";
  if (!config.report_path) out << json;
  return report.counterexamples.empty() ? kExitOk : kExitFailed;
}

int cmd_hull(const HullRequest& request, std::ostream& out) {
  if (request.type == TypeTag::Unsupported) throw Error(ErrorKind::ConfigError, "unsupported type");
  const Tessellation t = Tessellation::build(request.type);
  const Chamber u = t.from_word(request.u);
  const Chamber v = t.from_word(request.v);
  const std::optional<Chamber> w = request.w ? std::optional<Chamber>(t.from_word(*request.w)) : std::nullopt;

  const Chamber uv[] = {u, v};
  const std::size_t size_uv = cross_checked_hull(t, uv).size();
  out << "d(u,v) = " << distance(t, u, v) << "  |Conv(u,v)| = " << size_uv << '\n';
  int status = kExitOk;
  if (w) {
    const Chamber vw[] = {v, *w};
    const Chamber uw[] = {u, *w};
    const Chamber uvw[] = {u, v, *w};
    const std::size_t size_vw = cross_checked_hull(t, vw).size();
    const std::size_t size_uw = cross_checked_hull(t, uw).size();
    const std::size_t size_uvw = cross_checked_hull(t, uvw).size();
    out << "d(v,w) = " << distance(t, v, *w) << "  |Conv(v,w)| = " << size_vw << '\n';
    out << "d(u,w) = " << distance(t, u, *w) << "  |Conv(u,w)| = " << size_uw << '\n';
    out << "|Conv(u,v,w)| = " << size_uvw << '\n';
    const bool holds = size_uv * size_vw >= size_uvw;
    out << "|Conv(u,v)| * |Conv(v,w)| = " << size_uv * size_vw << (holds ? " >= " : " < ") << size_uvw
        << (holds ? "  strong hull inequality holds\n" : "  COUNTEREXAMPLE\n");
    if (!holds) status = kExitFailed;
  }
  if (request.svg_path) {
    const SvgScene scene = build_scene(t, u, v, w ? &*w : nullptr);
    write_atomically(*request.svg_path, scene.render());
    out << "svg written to " << *request.svg_path << " (" << scene.polygons.size() << " polygons, "
        << scene.walls.size() << " walls)\n";
  }
  return status;
}

int cmd_formula(const FormulaRequest& request, std::ostream& out) {
  bool equal = true;
  switch (request.type) {
    case TypeTag::A2Tilde: {
      if (!request.xy) throw Error(ErrorKind::ConfigError, "a2t needs --xy x,y");
      const auto c = parse_ints(*request.xy, 2, "--xy");
      A2Coord coord{c[0], c[1], (c[0] + c[1]) % 2 == 0 ? Orientation::Up : Orientation::Down};
      if (request.orientation) {
        if (*request.orientation == "up")
          coord.base_orientation = Orientation::Up;
        else if (*request.orientation == "down")
          coord.base_orientation = Orientation::Down;
        else
          throw Error(ErrorKind::ConfigError, "--orient must be up or down");
      }
      const BigInt value = a2_pair_count(coord);
      out << "a2t (" << coord.x << ',' << coord.y << ") base "
          << (coord.base_orientation == Orientation::Up ? "up" : "down") << ": |Conv(u,v)| = " << value << '\n';
      if (request.verify) {
        const Tessellation t = Tessellation::build(TypeTag::A2Tilde);
        const auto [u, v] = a2_chamber_pair(t, coord);
        const std::size_t n = enumerate(t, {u, v});
        equal = value == BigInt(static_cast<unsigned long>(n));
        out << "enumerated " << n << ": " << value << (equal ? " = " : " != ") << n << '\n';
      }
      break;
    }
    case TypeTag::C2Tilde: {
      if (!request.abxy) throw Error(ErrorKind::ConfigError, "c2t needs --abxy a,b,x,y");
      const auto c = parse_ints(*request.abxy, 4, "--abxy");
      const C2CaseParams p{c[0], c[1], c[2], c[3]};
      const C2Counts counts = c2_case2_counts(p);
      out << "c2t (a,b,x,y) = (" << p.a << ',' << p.b << ',' << p.x << ',' << p.y << "): (|Conv(u,v)|, |Conv(v,w)|, "
          << "|Conv(u,v,w)|) = (" << counts.size_uv << ", " << counts.size_vw << ", " << counts.size_uvw << ")\n";
      if (request.verify) {
        const Tessellation t = Tessellation::build(TypeTag::C2Tilde);
        const ChamberTriple tr = c2_case2_triple(t, p);
        const std::size_t n[] = {enumerate(t, {tr.u, tr.v}), enumerate(t, {tr.v, tr.w}),
                                 enumerate(t, {tr.u, tr.v, tr.w})};
        const BigInt* f[] = {&counts.size_uv, &counts.size_vw, &counts.size_uvw};
        for (int i = 0; i < 3; ++i) equal = equal && *f[i] == BigInt(static_cast<unsigned long>(n[i]));
        out << "enumerated (" << n[0] << ", " << n[1] << ", " << n[2] << "): " << (equal ? "all equal" : "MISMATCH")
            << '\n';
      }
      break;
    }
    case TypeTag::I2Infinity: {
      if (!request.d) throw Error(ErrorKind::ConfigError, "i2inf needs --d N");
      const BigInt value = dihedral_pair_count(*request.d);
      out << "i2inf d = " << *request.d << ": |Conv(u,v)| = " << value << '\n';
      if (request.verify) {
        const Tessellation t = Tessellation::build(TypeTag::I2Infinity);
        const std::size_t n = enumerate(t, {dihedral_cell(t, 0), dihedral_cell(t, *request.d)});
        equal = value == BigInt(static_cast<unsigned long>(n));
        out << "enumerated " << n << ": " << value << (equal ? " = " : " != ") << n << '\n';
      }
      break;
    }
    default:
      throw Error(ErrorKind::ConfigError, std::string("no closed form for ") + std::string(tag_name(request.type)));
  }
  return equal ? kExitOk : kExitFailed;
}

int cmd_prove(const ProveRequest& request, std::ostream& out) {
  bool ok = true;
  if (request.which == "a2") {
    const A2IdentityResult r = verify_prop31_identities();
    out << "LHS product expansion: " << r.lhs_product.to_string() << '\n';
    out << "[" << verdict(r.lhs_match) << "] decomposed LHS expands to the product LHS\n";
    for (const auto& m : r.lhs_residual)
      out << "    " << m.term << ": expected " << m.expected << ", got " << m.got << '\n';
    out << "RHS expansion: " << r.rhs_direct.to_string() << '\n';
    out << "[" << verdict(r.rhs_match) << "] factored RHS expands to the direct RHS\n";
    for (const auto& m : r.rhs_residual)
      out << "    " << m.term << ": expected " << m.expected << ", got " << m.got << '\n';
    const BoxResult box = a2_inequality_box(request.box.value_or(25));
    const bool box_ok = box.violations == 0;
    out << "[" << verdict(box_ok) << "] LHS >= RHS on " << box.tuples_checked << " admissible (x,y,a,b) in [0,"
        << box.bound << "]^4, " << box.violations << " violations" << (box_ok ? "" : ", first " + box.first_violation)
        << '\n';
    ok = r.lhs_match && r.rhs_match && box_ok;
  } else if (request.which == "c2") {
    const C2ExpansionResult r = verify_prop32_expansion();
    out << "LHS - RHS = " << r.difference.to_string() << '\n';
    out << "  (" << r.difference.term_count() << " terms)\n";
    out << "[" << verdict(r.matches()) << "] equals the printed expansion " << kC2ExpectedExpansion << '\n';
    for (const auto& m : r.mismatches)
      out << "    " << m.term << ": expected " << m.expected << ", got " << m.got << '\n';
    const bool positive = check_nonneg_coeffs(r.difference);
    out << "[" << verdict(positive) << "] all coefficients non-negative\n";
    const BoxResult box = c2_inequality_box(request.box.value_or(40));
    const bool box_ok = box.violations == 0;
    out << "[" << verdict(box_ok) << "] LHS >= RHS on " << box.tuples_checked << " admissible (a,b,x,y) in [0,"
        << box.bound << "]^4, " << box.violations << " violations" << (box_ok ? "" : ", first " + box.first_violation)
        << '\n';
    const MultiPoly residual = c2_vw_simplification_residual();
    out << "note: row-sum |Conv(v,w)| minus its simplified form = " << residual.to_string() << '\n';
    const MultiPoly row_sum = c2_row_sum_difference();
    const bool row_sum_ok = check_nonneg_coeffs(row_sum);
    out << "LHS - RHS with the row-sum count = " << row_sum.to_string() << '\n';
    out << "[" << verdict(row_sum_ok) << "] all coefficients non-negative\n";
    ok = r.matches() && positive && box_ok && row_sum_ok;
  } else {
    throw Error(ErrorKind::ConfigError, "prove expects a2 or c2, got '" + request.which + "'");
  }
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kExitOk : kExitFailed;
}

}  // namespace coxhull
