// alphacf: command-line driver for the alpha-continued-fraction toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "alphacf/alpha_dynamics.hpp"
#include "alphacf/classification.hpp"
#include "alphacf/dictionary.hpp"
#include "alphacf/quadratic_intervals.hpp"
#include "alphacf/tuning.hpp"

using namespace alphacf;
using json = nlohmann::ordered_json;

namespace {

std::string cf_literal(const Rational& r) { return format_exact(Surd(r)); }

json interval_json(const QuadraticInterval& iv) {
  return {{"r", to_string(iv.r)},
          {"r_cf", cf_literal(iv.r)},
          {"s0", iv.s0.to_string()},
          {"s1", iv.s1.to_string()},
          {"alpha1", format_exact(iv.alpha1)},
          {"alpha0", format_exact(iv.alpha0)},
          {"index", iv.index.get_str()},
          {"n", iv.n.get_str()},
          {"m", iv.m.get_str()}};
}

json window_json(const TuningWindow& w) {
  return {{"r", to_string(w.r)},
          {"omega", format_exact(w.omega)},
          {"alpha0", format_exact(w.alpha0)},
          {"neutral", w.neutral}};
}

json rationals_json(const std::vector<Rational>& rs) {
  json out = json::array();
  for (const Rational& r : rs) out.push_back(to_string(r));
  return out;
}

BinaryAngle parse_angle(const std::string& text) {
  // "0.bits(bits)"
  if (text.rfind("0.", 0) != 0) throw std::invalid_argument("angle literal must start with '0.': " + text);
  std::size_t open = text.find('(');
  std::size_t close = text.find(')');
  if (open == std::string::npos || close != text.size() - 1 || close < open)
    throw std::invalid_argument("angle literal needs a parenthesized period: " + text);
  return BinaryAngle(text.substr(2, open - 2), text.substr(open + 1, close - open - 1));
}

CFString parse_word(std::string text) {
  std::vector<Digit> digits;
  for (char& c : text)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  std::istringstream in(text);
  long d;
  while (in >> d) digits.push_back(d);
  if (!in.eof()) throw std::invalid_argument("bad digit string");
  return CFString(std::move(digits));
}

std::uint64_t parse_count(const std::string& text) {
  // Accepts integers and exponent forms such as 1e6.
  std::size_t used = 0;
  double v = std::stod(text, &used);
  if (used != text.size() || v < 1 || v != std::floor(v) || v > 1e18)
    throw std::invalid_argument("expected a positive integer count, got " + text);
  return static_cast<std::uint64_t>(v);
}

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// scan

struct ScanOptions {
  double lo = 0.5;
  double hi = 1.0;
  int points = 101;
  std::string iters = "1e6";
  std::uint64_t burn_in = 1000;
  int replicas = 8;
  std::uint64_t seed = 7;
  std::string window;
  std::string out;
  bool no_timestamp = false;
  bool serial = false;
};

int run_scan(const ScanOptions& o) {
  double lo = o.lo, hi = o.hi;
  std::string source = "lo/hi";
  if (!o.window.empty()) {
    TuningWindow w = tuning_window(parse_rational(o.window));
    lo = w.omega.to_double();
    hi = w.alpha0.to_double();
    source = "window " + to_string(w.r) + " = [" + format_exact(w.omega) + ", " + format_exact(w.alpha0) + ")";
  }
  EntropyConfig config{parse_count(o.iters), o.burn_in, o.replicas, o.serial ? Execution::serial : Execution::parallel};
  std::vector<EntropyEstimate> rows = entropy_scan(lo, hi, o.points, o.seed, config);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot open " + o.out);
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  std::ostringstream range;
  range << std::setprecision(17) << "# lo=" << lo << " hi=" << hi << " (" << source << ")";
  out << "# alphacf scan\n" << range.str() << "\n";
  out << "# points=" << o.points << " iterations=" << config.iterations << " burn_in=" << config.burn_in
      << " replicas=" << config.replicas << " seed=" << o.seed << "\n";
  out << "# entropy in nats; row seeds derive from the root seed by splitmix64\n";
  if (!o.no_timestamp) out << "# generated " << timestamp() << "\n";
  write_entropy_csv(out, rows);
  return 0;
}

// classify

json verdict_json(const Surd& alpha, const MonotonicityClass& c, double radius, long max_q) {
  json w = json::object();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MonotoneIncreasing> || std::is_same_v<T, MonotoneDecreasing>) {
          if (v.interval) w["interval"] = interval_json(*v.interval);
          else w["beyond_golden_mean"] = true;
        } else if constexpr (std::is_same_v<T, MonotoneConstantOnInterval>) {
          w["interval"] = interval_json(v.interval);
        } else if constexpr (std::is_same_v<T, PhaseTransition>) {
          w["r"] = v.r ? json(to_string(*v.r)) : json(nullptr);
          w["chain"] = rationals_json(v.chain);
          w["relation"] = v.r ? "alpha = tau_r(g)" : "alpha = g";
        } else if constexpr (std::is_same_v<T, LocallyConstant>) {
          w["window"] = window_json(v.window);
          w["chain"] = rationals_json(v.chain);
        } else if constexpr (std::is_same_v<T, Mixed>) {
          w["chain"] = rationals_json(v.chain);
          w["pullback"] = format_exact(v.pullback);
          if (radius > 0) {
            MixedWitnesses m = mixed_witnesses(alpha, radius, max_q);
            json found = json::object();
            if (m.increasing) found["increasing"] = interval_json(*m.increasing);
            if (m.constant) found["constant"] = interval_json(*m.constant);
            if (m.decreasing) found["decreasing"] = interval_json(*m.decreasing);
            found["radius"] = m.radius;
            found["max_q"] = m.max_denominator;
            found["complete"] = m.complete();
            w["neighbourhood"] = found;
          }
        } else {
          w["reason"] = v.reason;
        }
      },
      c);
  return {{"alpha", format_exact(alpha)}, {"class", class_tag(c)}, {"witnesses", w}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for alpha-continued fractions"};
  app.require_subcommand(1);

  ScanOptions scan;
  auto* cmd_scan = app.add_subcommand("scan", "Entropy scan over a parameter range, CSV output");
  cmd_scan->add_option("--lo", scan.lo, "Lower alpha")->capture_default_str();
  cmd_scan->add_option("--hi", scan.hi, "Upper alpha")->capture_default_str();
  cmd_scan->add_option("--points", scan.points, "Grid points, endpoints included")->capture_default_str();
  cmd_scan->add_option("--iters", scan.iters, "Iterations per replica (1e6 style accepted)")->capture_default_str();
  cmd_scan->add_option("--burn-in", scan.burn_in, "Discarded steps per replica")->capture_default_str();
  cmd_scan->add_option("--replicas", scan.replicas, "Independent orbits per point")->capture_default_str();
  cmd_scan->add_option("--seed", scan.seed, "Root seed")->capture_default_str();
  cmd_scan->add_option("--window", scan.window, "Scan the tuning window W_r of this rational instead");
  cmd_scan->add_option("--out", scan.out, "Output file (default stdout)");
  cmd_scan->add_flag("--no-timestamp", scan.no_timestamp, "Omit the timestamp header line");
  cmd_scan->add_flag("--serial", scan.serial, "Use the serial reference kernel");

  std::string classify_alpha;
  double witness_radius = 0;
  long witness_max_q = 500;
  auto* cmd_classify = app.add_subcommand("classify", "Local monotonicity class of h at an exact alpha, JSON");
  cmd_classify->add_option("alpha", classify_alpha, "Exact literal: [0;a1,..,(p1,..)], p/q")->required();
  cmd_classify->add_option("--witness-radius", witness_radius, "For Mixed: search this neighbourhood for witnesses");
  cmd_classify->add_option("--witness-max-q", witness_max_q, "Denominator bound of that search")->capture_default_str();

  std::string plateau_r;
  auto* cmd_plateau = app.add_subcommand("plateau", "Plateau verdict for the tuning window of r, JSON");
  cmd_plateau->add_option("r", plateau_r, "Rational p/q in Q_E")->required();

  long qe_max_q = 10;
  std::string qe_format = "csv";
  auto* cmd_qe = app.add_subcommand("qe", "Extremal rationals and their maximal quadratic intervals");
  cmd_qe->add_option("--max-q", qe_max_q, "Denominator bound")->capture_default_str();
  cmd_qe->add_option("--format", qe_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::string tune_r, tune_x;
  auto* cmd_tune = app.add_subcommand("tune", "tau_r(x) with the window and factorization of r, JSON");
  cmd_tune->add_option("r", tune_r, "Generator p/q")->required();
  cmd_tune->add_option("x", tune_x, "Exact literal in [0,1]")->required();

  long match_max_q = 40;
  bool match_serial = false;
  auto* cmd_match = app.add_subcommand("match", "Exact matching check at quartile points of every I_r");
  cmd_match->add_option("--max-q", match_max_q, "Denominator bound")->capture_default_str();
  cmd_match->add_flag("--serial", match_serial, "Use the serial reference loop");

  auto* cmd_dict = app.add_subcommand("dict", "Dictionary with binary external angles");
  cmd_dict->require_subcommand(1);
  std::string phi_x;
  auto* dict_phi = cmd_dict->add_subcommand("phi", "Binary angle of an exact x");
  dict_phi->add_option("x", phi_x, "Exact literal in [0,1]")->required();
  std::string roots_r;
  auto* dict_roots = cmd_dict->add_subcommand("roots", "Root strings Sigma0, Sigma1 of r");
  dict_roots->add_option("r", roots_r, "Rational in Q_E")->required();
  std::string tauw_r, tauw_theta;
  auto* dict_tauw = cmd_dict->add_subcommand("tauw", "Substitution tuning of an angle by the roots of r");
  dict_tauw->add_option("r", tauw_r, "Rational in Q_E")->required();
  dict_tauw->add_option("theta", tauw_theta, "Angle literal 0.pre(per)")->required();
  std::string ray_theta;
  auto* dict_ray = cmd_dict->add_subcommand("realray", "Tent-map real-ray test");
  dict_ray->add_option("theta", ray_theta, "Angle literal 0.pre(per)")->required();
  std::string commute_r;
  long commute_max_q = 10;
  std::size_t commute_bits = 40;
  int commute_samples = 20;
  std::uint64_t commute_seed = 1;
  auto* dict_commute = cmd_dict->add_subcommand("commute", "Check tau_W(phi(x)) = phi(tau_r(x)) on random x");
  dict_commute->add_option("--r", commute_r, "One generator (default: all r in Q_E up to --max-q)");
  dict_commute->add_option("--max-q", commute_max_q, "Denominator bound when --r is absent")->capture_default_str();
  dict_commute->add_option("--bits", commute_bits, "Compared bits")->capture_default_str();
  dict_commute->add_option("--samples", commute_samples, "Random x per generator")->capture_default_str();
  dict_commute->add_option("--seed", commute_seed, "Seed for the random x")->capture_default_str();

  std::vector<std::string> dims_words;
  bool dims_tw = false;
  auto* cmd_dims = app.add_subcommand("dims", "Dimension bracket of the Cantor set over an alphabet, JSON");
  cmd_dims->add_option("words", dims_words, "Words such as (1,1,2)");
  cmd_dims->add_flag("--tw", dims_tw, "Use the alphabet Z_i Z_j with Z0=(1,1), Z1=(2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_scan) return run_scan(scan);

    if (*cmd_classify) {
      Surd alpha = parse_exact(classify_alpha);
      std::cout << verdict_json(alpha, classify_parameter(alpha), witness_radius, witness_max_q).dump(2) << "\n";
      return 0;
    }

    if (*cmd_plateau) {
      Rational r = parse_rational(plateau_r);
      PlateauVerdict v = plateau_verdict(r);
      json out{{"r", to_string(r)}, {"window", window_json(tuning_window(r))}};
      if (auto* nr = std::get_if<PlateauNR>(&v)) {
        out["verdict"] = "PlateauNR";
        out["witnesses"] = {{"r", to_string(nr->r)}};
      } else if (auto* fr = std::get_if<PlateauFR>(&v)) {
        out["verdict"] = "PlateauFR";
        out["witnesses"] = {{"r0", to_string(fr->r0)}, {"r1", to_string(fr->r1)}, {"factors", rationals_json(fr->factors)}};
      } else {
        out["verdict"] = "NotPlateau";
        out["witnesses"] = {{"reason", std::get<NotPlateau>(v).reason}};
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_qe) {
      std::vector<QuadraticInterval> ivs = enumerate_qe(qe_max_q);
      if (qe_format == "json") {
        json out = json::array();
        for (const QuadraticInterval& iv : ivs) out.push_back(interval_json(iv));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "r,index,s0,s1,alpha1,alpha0\n";
        for (const QuadraticInterval& iv : ivs)
          std::cout << to_string(iv.r) << ',' << iv.index << ",\"" << iv.s0.to_string() << "\",\"" << iv.s1.to_string()
                    << "\",\"" << format_exact(iv.alpha1) << "\",\"" << format_exact(iv.alpha0) << "\"\n";
      }
      return 0;
    }

    if (*cmd_tune) {
      Rational r = parse_rational(tune_r);
      Surd x = parse_exact(tune_x);
      json out{{"r", to_string(r)}, {"x", format_exact(x)}, {"tau", format_exact(tau_value(r, x))}};
      if (is_extremal(r)) {
        out["window"] = window_json(tuning_window(r));
        out["factorization"] = rationals_json(untuned_factorization(r));
      } else {
        out["window"] = nullptr;
        out["note"] = "r is not extremal";
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_match) {
      MatchingReport rep = check_matching(match_max_q, match_serial ? Execution::serial : Execution::parallel);
      std::cout << "intervals " << rep.intervals << "\npoints " << rep.points << "\nverified " << rep.verified
                << "\nmismatches " << rep.mismatches << "\norbit_hit_zero " << rep.hit_zero << " (resolved "
                << rep.hit_zero_resolved << ")\n";
      for (const std::string& f : rep.failures) std::cout << "failed " << f << "\n";
      std::cout << (rep.ok() ? "all Verified" : "FAILED") << "\n";
      return rep.ok() ? 0 : 1;
    }

    if (*cmd_dict) {
      if (*dict_phi) {
        BinaryAngle a = phi(parse_exact(phi_x));
        std::cout << json{{"x", phi_x}, {"angle", a.to_string()}, {"value", to_string(a.value())}}.dump(2) << "\n";
        return 0;
      }
      if (*dict_roots) {
        auto [s0, s1] = root_angles(parse_rational(roots_r));
        std::cout << json{{"r", roots_r}, {"sigma0", s0}, {"sigma1", s1}}.dump(2) << "\n";
        return 0;
      }
      if (*dict_tauw) {
        auto [s0, s1] = root_angles(parse_rational(tauw_r));
        BinaryAngle a = tau_w(s0, s1, parse_angle(tauw_theta));
        std::cout << json{{"angle", a.to_string()}, {"value", to_string(a.value())}}.dump(2) << "\n";
        return 0;
      }
      if (*dict_ray) {
        BinaryAngle a = parse_angle(ray_theta);
        std::cout << json{{"angle", a.to_string()}, {"real_ray", is_real_ray(a)}}.dump(2) << "\n";
        return 0;
      }
      if (*dict_commute) {
        std::vector<Rational> gens =
            commute_r.empty() ? enumerate_qe_rationals(commute_max_q) : std::vector<Rational>{parse_rational(commute_r)};
        std::mt19937_64 rng(commute_seed);
        std::uniform_int_distribution<Digit> digit(1, 9);
        long passed = 0, total = 0;
        for (const Rational& r : gens)
          for (int k = 0; k < commute_samples; ++k) {
            std::vector<Digit> d(commute_bits);
            for (Digit& x : d) x = digit(rng);
            bool ok = commutation_check(r, CFString(std::move(d)), commute_bits);
            ++total;
            passed += ok;
            if (!ok) std::cout << "failed r=" << to_string(r) << " sample " << k << "\n";
          }
        std::cout << "commutation " << passed << "/" << total << " passed\n";
        return passed == total ? 0 : 1;
      }
    }

    if (*cmd_dims) {
      std::vector<CFString> alphabet;
      if (dims_tw) {
        CFString z0{1, 1}, z1{2};
        alphabet = {z0 + z0, z0 + z1, z1 + z0, z1 + z1};
      }
      for (const std::string& w : dims_words) alphabet.push_back(parse_word(w));
      DimensionBounds d = dimension_bounds(alphabet);
      json words = json::array();
      for (const CFString& w : d.alphabet) words.push_back(w.to_string());
      std::cout << std::setprecision(17)
                << json{{"alphabet", words}, {"N", d.n}, {"m1", d.m1}, {"m2", d.m2}, {"lower", d.lower}, {"upper", d.upper}}.dump(2)
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
