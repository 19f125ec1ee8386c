#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hmf/gallery.hpp"

namespace hmf::cli {

enum class Format { text, csv, json };

namespace detail {

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw Error(ErrorCode::BadParams, "--format must be json, csv or text, got '" + s + "'");
}

inline std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline std::vector<Index> parse_schedule(const std::string& s) {
  std::vector<Index> out;
  for (const auto& item : split(s)) {
    std::size_t used = 0;
    Index v = 0;
    try {
      if (item.empty() || item[0] == '-' || item[0] == '+') throw std::invalid_argument(item);
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Error(ErrorCode::ParseError, "--schedule entries must be nonnegative integers, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::BadParams, "--schedule is empty");
  return out;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s)) out.push_back(Rational::parse(item));
  return out;
}

inline io::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_text(buf.str(), path);
}

/// A system file is either {"context", "vectors"} or {"generator", "params"}.
inline OrthoSystem load_system(const std::string& path) {
  const io::Json j = load_json(path);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, path + ": expected an object");
  if (auto g = j.find("generator"); g != j.end()) {
    if (!g->is_string()) throw Error(ErrorCode::ParseError, path + ".generator: expected a gallery id");
    gallery::Params params;
    if (auto p = j.find("params"); p != j.end()) {
      if (!p->is_object()) throw Error(ErrorCode::ParseError, path + ".params: expected an object");
      for (const auto& [k, v] : p->items()) {
        if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, path + ".params." + k + ": expected an integer");
        params[k] = v.get<long>();
      }
    }
    return gallery::build(g->get<std::string>(), params).main();
  }
  const ModuleContext ctx = io::context_from_json(io::detail::field(j, "context", path), path + ".context");
  const io::Json& vs = io::detail::field(j, "vectors", path);
  if (!vs.is_array()) throw Error(ErrorCode::ParseError, path + ".vectors: expected an array");
  std::vector<ModuleVector> vectors;
  for (std::size_t k = 0; k < vs.size(); ++k)
    vectors.push_back(io::vector_from_json(vs[k], ctx, path + ".vectors[" + std::to_string(k) + "]"));
  return OrthoSystem::finite(ctx, std::move(vectors));
}

/// A vector file holds one vector {"entries"} or a list {"vectors": [...]}.
inline std::vector<ModuleVector> load_vectors(const std::string& path, const ModuleContext& ctx) {
  const io::Json j = load_json(path);
  if (j.is_object() && j.contains("vectors")) {
    const io::Json& vs = j["vectors"];
    if (!vs.is_array()) throw Error(ErrorCode::ParseError, path + ".vectors: expected an array");
    std::vector<ModuleVector> out;
    for (std::size_t k = 0; k < vs.size(); ++k)
      out.push_back(io::vector_from_json(vs[k], ctx, path + ".vectors[" + std::to_string(k) + "]"));
    return out;
  }
  return {io::vector_from_json(j, ctx, path)};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline Rational default_width_from_env() {
  const char* env = std::getenv("HMF_WIDTH");
  if (env == nullptr || *env == '\0') return default_width();
  return Rational::parse(env);
}

inline void emit_reports(std::ostream& out, const std::vector<VerdictReport>& reports, Format fmt) {
  if (fmt == Format::json) {
    io::Json j;
    if (reports.size() == 1) {
      j = to_json(reports.front());
    } else {
      j = io::Json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
    }
    out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    out << "id,check,status,claim\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out << csv_field(r.id) << "," << csv_field(c.name) << "," << (c.passed ? "pass" : "fail") << ","
            << csv_field(c.claim) << "\n";
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) out << (k ? "\n" : "") << to_text(reports[k]);
  }
}

}  // namespace detail

/// Runs one command. Exit codes: 0 all checks pass, 1 a claim failed, 2 bad input.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fourier machinery in Hilbert C*-modules over function algebras", "hmf"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string width_text;

  auto* verify = app.add_subcommand("verify", "run the claim suite of a gallery example (or 'all')");
  std::string id;
  long n = 0;
  verify->add_option("id", id, "gallery id or 'all'")->required();
  auto* n_opt = verify->add_option("--n", n, "size parameter of the example");
  verify->add_option("--format", format, "json, csv or text");

  auto* table = app.add_subcommand("table", "convergence table of partial Fourier sums");
  std::string system_path, vector_path, schedule_text, eps_text;
  table->add_option("--system", system_path, "system JSON file")->required();
  table->add_option("--vector", vector_path, "vector JSON file")->required();
  table->add_option("--schedule", schedule_text, "comma-separated prefix lengths")->required();
  table->add_option("--eps", eps_text, "comma-separated rationals");
  table->add_option("--width", width_text, "enclosure width");
  auto* table_format = table->add_option("--format", format, "json, csv or text");

  auto* frame = app.add_subcommand("frame", "check frame bounds C<x,x> <= sum <x,x_i><x_i,x> <= D<x,x>");
  std::string lower_text, upper_text;
  frame->add_option("--system", system_path, "system JSON file")->required();
  frame->add_option("--vector", vector_path, "test vector(s) JSON file")->required();
  frame->add_option("--lower", lower_text, "lower bound C")->required();
  frame->add_option("--upper", upper_text, "upper bound D")->required();
  frame->add_option("--format", format, "json, csv or text");

  auto* inspect = app.add_subcommand("inspect", "validate and summarise a piecewise polynomial element");
  std::string element_path;
  inspect->add_option("path", element_path, "element JSON file")->required();
  inspect->add_option("--width", width_text, "enclosure width");
  inspect->add_option("--format", format, "json, csv or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Rational width = width_text.empty() ? detail::default_width_from_env() : Rational::parse(width_text);
    if (width.sign() <= 0) throw Error(ErrorCode::NonpositiveWidth, "width must be positive, got " + width.str());

    if (verify->parsed()) {
      const Format fmt = detail::parse_format(format);
      gallery::Params params;
      if (n_opt->count() > 0) params["n"] = n;
      std::vector<std::string> which;
      if (id == "all")
        which = gallery::ids();
      else
        which.push_back(gallery::canonical_id(id));
      std::vector<VerdictReport> reports;
      for (const auto& w : which) reports.push_back(gallery::verify(w, params));
      detail::emit_reports(out, reports, fmt);
      int code = 0;
      for (const auto& r : reports)
        for (const auto& c : r.checks)
          if (!c.passed) {
            err << "FAILED " << r.id << ": " << c.name << "\n";
            code = 1;
          }
      return code;
    }

    if (table->parsed()) {
      const Format fmt = table_format->count() > 0 ? detail::parse_format(format) : Format::csv;
      const OrthoSystem sys = detail::load_system(system_path);
      const auto xs = detail::load_vectors(vector_path, sys.context());
      if (xs.size() != 1) throw Error(ErrorCode::ParseError, vector_path + ": table expects exactly one vector");
      const auto schedule = detail::parse_schedule(schedule_text);
      const auto eps = eps_text.empty() ? std::vector<Rational>{} : detail::parse_rationals(eps_text);
      const auto rows = convergence_table(sys, xs.front(), schedule, eps, width);
      if (fmt == Format::json) {
        io::Json j = io::Json::array();
        for (const auto& r : rows) {
          io::Json jr;
          jr["n"] = r.n;
          jr["residual_norm"] = io::to_json(r.residual_norm);
          io::Json m = io::Json::object();
          for (std::size_t k = 0; k < eps.size(); ++k) m[eps[k].str()] = io::to_json(r.superlevel[k]);
          jr["superlevel"] = m;
          j.push_back(jr);
        }
        out << j.dump(2) << "\n";
      } else {
        const char* sep = fmt == Format::csv ? "," : "  ";
        out << "n" << sep << "residual_norm_lo" << sep << "residual_norm_hi";
        for (const auto& e : eps) out << sep << "measure_gt_" << e.str() << "_lo" << sep << "measure_gt_" << e.str() << "_hi";
        out << "\n";
        for (const auto& r : rows) {
          out << r.n << sep << r.residual_norm.lo.str() << sep << r.residual_norm.hi.str();
          for (const auto& m : r.superlevel) out << sep << m.lo.str() << sep << m.hi.str();
          out << "\n";
        }
      }
      return 0;
    }

    if (frame->parsed()) {
      const Format fmt = detail::parse_format(format);
      const OrthoSystem sys = detail::load_system(system_path);
      if (!sys.size()) throw Error(ErrorCode::BadParams, system_path + ": frame checks need a finite system");
      std::vector<ModuleVector> vectors;
      for (Index i = 1; i <= *sys.size(); ++i) vectors.push_back(sys.at(i));
      const auto tests = detail::load_vectors(vector_path, sys.context());
      const Rational C = Rational::parse(lower_text), D = Rational::parse(upper_text);
      const FrameReport fr = frame_check(sys.context(), vectors, tests, C, D);
      auto opt = [](const std::optional<Rational>& r) { return r ? r->str() : std::string(); };
      if (fmt == Format::json) {
        io::Json j;
        j["lower"] = C.str();
        j["upper"] = D.str();
        j["tight"] = fr.tight();
        j["normalized"] = fr.normalized();
        j["standard"] = fr.all_standard();
        io::Json rows = io::Json::array();
        for (const auto& r : fr.rows) {
          io::Json jr;
          jr["lower_ok"] = r.lower_ok;
          jr["upper_ok"] = r.upper_ok;
          jr["standard"] = r.standard;
          if (r.lower_witness) jr["lower_witness"] = r.lower_witness->str();
          if (r.upper_witness) jr["upper_witness"] = r.upper_witness->str();
          rows.push_back(jr);
        }
        j["rows"] = rows;
        out << j.dump(2) << "\n";
      } else {
        out << "test,lower_ok,upper_ok,standard,lower_witness,upper_witness\n";
        for (std::size_t k = 0; k < fr.rows.size(); ++k) {
          const auto& r = fr.rows[k];
          out << k + 1 << "," << r.lower_ok << "," << r.upper_ok << "," << r.standard << "," << opt(r.lower_witness) << ","
              << opt(r.upper_witness) << "\n";
        }
        if (fmt == Format::text)
          out << "tight=" << fr.tight() << " normalized=" << fr.normalized() << " standard=" << fr.all_standard() << "\n";
      }
      if (!fr.all_lower() || !fr.all_upper()) {
        err << "FAILED frame bounds " << C.str() << ", " << D.str() << "\n";
        return 1;
      }
      return 0;
    }

    // inspect
    const Format fmt = detail::parse_format(format);
    const PPoly f = io::ppoly_from_json(detail::load_json(element_path), element_path);
    const Enclosure norm = sup_norm(f, width);
    const auto neg = negative_witness(f);
    const ZeroSet zs = zero_set(f);
    if (fmt == Format::json) {
      io::Json j;
      j["element"] = io::to_json(f);
      j["sup_norm"] = io::to_json(norm);
      j["nonnegative"] = !neg.has_value();
      io::Json plateaus = io::Json::array();
      for (const auto& p : zs.plateaus) plateaus.push_back(io::Json::array({p.lo.str(), p.hi.str()}));
      j["zero_plateaus"] = plateaus;
      j["isolated_zeros"] = zs.points.size();
      out << j.dump(2) << "\n";
    } else {
      const char* sep = fmt == Format::csv ? "," : " = ";
      out << "element" << sep << detail::csv_field(f.str()) << "\n";
      out << "algebra" << sep << detail::csv_field(f.descriptor().str()) << "\n";
      out << "sup_norm" << sep << (norm.is_exact() ? norm.lo.str() : "[" + norm.lo.str() + " " + norm.hi.str() + "]") << "\n";
      out << "nonnegative" << sep << (neg ? "false" : "true") << "\n";
      out << "zero_plateaus" << sep << zs.plateaus.size() << "\n";
      out << "isolated_zeros" << sep << zs.points.size() << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hmf::cli
