#include "nichols/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nichols/nichols_oracle.hpp"

namespace nichols::cli {

namespace fs = std::filesystem;

namespace {

std::string scalar_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) throw ParseError(where + ": floating-point scalars are not exact; write \"a/b\"");
  throw ParseError(where + ": scalar must be a string or an integer");
}

std::size_t count_field(const Json& doc, const char* key) {
  const Json& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::vector<std::string>> scalar_matrix(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array()) throw ParseError(where + " row " + std::to_string(i) + " is not an array");
    std::vector<std::string> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      row.push_back(scalar_text(v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
      throw ParseError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

template <FieldScalar T>
Matrix<T> parse_matrix(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows, std::size_t size,
                       const char* what) {
  if (rows.size() != size) {
    throw DimensionMismatch(std::string(what) + " must have " + std::to_string(size) + " rows");
  }
  Matrix<T> m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) {
    if (rows[i].size() != size) {
      throw DimensionMismatch(std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(size) +
                              " entries");
    }
    for (std::size_t j = 0; j < size; ++j) m(i, j) = T::parse(rows[i][j], field);
  }
  return m;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream s;
  for (std::size_t k = 0; k < xs.size(); ++k) s << (k ? " " : "") << xs[k];
  return s.str();
}

std::string read_all(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string input;
  std::optional<std::size_t> cutoff;
  std::optional<std::size_t> max_iter;
  bool oracle = false;
  std::string cache;
  bool json = false;
  std::size_t stage = 0;
  std::optional<std::size_t> degree;
};

void write_atomically(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write cache file " + tmp.string());
    f << content;
    if (!f.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

// ------------------------------------------------------------- commands

template <FieldScalar T>
int cmd_check(const JobSpec& job, const Options& opt, std::ostream& out) {
  const BraidedSpace<T> space = build_space<T>(job);
  if (opt.json) {
    Json doc;
    doc["valid"] = true;
    doc["field"] = space.field().to_string();
    doc["dimension"] = space.dimension();
    out << doc.dump(2) << "\n";
  } else {
    out << "valid: braiding of a " << space.dimension() << "-dimensional space over " << space.field().to_string()
        << " is invertible and satisfies the braid equation\n";
  }
  return kOk;
}

template <FieldScalar T>
std::unique_ptr<DirectoryCache<T>> open_cache(const JobSpec& job, const BraidedSpace<T>& space) {
  if (!job.cache_dir) return nullptr;
  return std::make_unique<DirectoryCache<T>>(*job.cache_dir, space, job.degree_cutoff);
}

void print_stage_table(const RankSummary& s, std::size_t cutoff, std::ostream& out) {
  out << std::left << std::setw(7) << "stage" << std::setw(36) << "hilbert (d=0..D)" << std::setw(28)
      << "new relations (d=2..D)"
      << "iso\n";
  for (std::size_t k = 0; k < s.stages.size(); ++k) {
    const StageReport& r = s.stages[k];
    out << std::left << std::setw(7) << k << std::setw(36) << join(r.hilbert) << std::setw(28)
        << join(r.new_relation_dims) << (r.iso ? "yes" : "no") << "\n";
  }
  out << "final hilbert: " << join(s.final_hilbert) << "\n";
  out << "rank at cutoff D=" << cutoff << " (a lower bound on the untruncated rank): ";
  if (s.rank_le_cutoff) {
    out << *s.rank_le_cutoff << "\n";
  } else {
    out << "not stabilized within max_iter\n";
  }
}

template <FieldScalar T>
int cmd_rank(const JobSpec& job, const Options& opt, std::ostream& out) {
  const BraidedSpace<T> space = build_space<T>(job);
  auto cache = open_cache(job, space);
  RankReport<T> report = run(space, job.degree_cutoff, *job.max_iter, cache.get());
  if (job.oracle) report.oracle_match = oracle::compare(report.final, oracle::nichols_truncation(space, job.degree_cutoff));
  const RankSummary summary = summarize(report);
  if (opt.json) {
    out << to_json(summary).dump(2) << "\n";
  } else {
    print_stage_table(summary, job.degree_cutoff, out);
    if (summary.oracle_match) out << "oracle match: " << (*summary.oracle_match ? "true" : "false") << "\n";
  }
  return summary.stabilized ? kOk : kNotStabilized;
}

template <FieldScalar T>
int cmd_nichols(const JobSpec& job, const Options& opt, std::ostream& out) {
  const BraidedSpace<T> space = build_space<T>(job);
  const GradedQuotient<T> reference = oracle::nichols_truncation(space, job.degree_cutoff);
  auto cache = open_cache(job, space);
  RankReport<T> report = run(space, job.degree_cutoff, *job.max_iter, cache.get());
  const bool match = oracle::compare(report.final, reference);
  report.oracle_match = match;
  const RankSummary summary = summarize(report);
  if (opt.json) {
    Json doc;
    doc["rank_le_cutoff"] = summary.rank_le_cutoff ? Json(*summary.rank_le_cutoff) : Json(nullptr);
    doc["stabilized"] = summary.stabilized;
    doc["tower_hilbert"] = summary.final_hilbert;
    doc["oracle_hilbert"] = reference.hilbert_series();
    doc["match"] = match;
    out << doc.dump(2) << "\n";
  } else {
    out << "tower hilbert:  " << join(summary.final_hilbert) << "\n";
    out << "oracle hilbert: " << join(reference.hilbert_series()) << "\n";
    out << "stabilized: " << (summary.stabilized ? "true" : "false") << "\n";
    out << "match: " << (match ? "true" : "false") << "\n";
  }
  if (!summary.stabilized) return kNotStabilized;
  return match ? kOk : kValidationFailure;
}

template <FieldScalar T>
int cmd_primitives(const JobSpec& job, const Options& opt, std::ostream& out) {
  if (!opt.degree) throw ParseError("primitives needs --degree");
  const std::size_t d = *opt.degree;
  if (d < 1 || d > job.degree_cutoff) throw ParseError("--degree must lie in 1..degree_cutoff");
  if (opt.stage > *job.max_iter) throw ParseError("--stage exceeds max_iter");
  const BraidedSpace<T> space = build_space<T>(job);
  auto cache = open_cache(job, space);
  const RankReport<T> report = run(space, job.degree_cutoff, opt.stage, cache.get());
  const GradedQuotient<T>& stage = opt.stage < report.quotients.size() ? report.quotients[opt.stage] : report.final;
  const Subspace<T> reps = primitives(stage, d).representatives;
  const std::size_t n = space.dimension();
  if (opt.json) {
    Json doc;
    doc["stage"] = opt.stage;
    doc["degree"] = d;
    doc["dimension"] = reps.dim();
    Json vectors = Json::array();
    Json terms = Json::array();
    for (std::size_t k = 0; k < reps.dim(); ++k) {
      Json v = Json::array();
      for (const T& x : reps.basis_vector(k)) v.push_back(x.to_string());
      vectors.push_back(std::move(v));
      terms.push_back(render_tensor<T>(reps.basis_vector(k), n, d));
    }
    doc["vectors"] = std::move(vectors);
    doc["terms"] = std::move(terms);
    out << doc.dump(2) << "\n";
  } else {
    out << "stage " << opt.stage << ", degree " << d << ": " << reps.dim() << " primitive"
        << (reps.dim() == 1 ? "" : "s") << "\n";
    for (std::size_t k = 0; k < reps.dim(); ++k) out << "  " << render_tensor<T>(reps.basis_vector(k), n, d) << "\n";
  }
  return kOk;
}

template <FieldScalar T>
int dispatch(const std::string& command, const JobSpec& job, const Options& opt, std::ostream& out) {
  if (command == "check") return cmd_check<T>(job, opt, out);
  if (command == "rank") return cmd_rank<T>(job, opt, out);
  if (command == "nichols") return cmd_nichols<T>(job, opt, out);
  return cmd_primitives<T>(job, opt, out);
}

}  // namespace

// ----------------------------------------------------------------- parsing

JobSpec parse_job(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("job must be a JSON object");
  reject_unknown(doc, {"field", "dimension", "braiding", "degree_cutoff", "max_iter", "oracle"}, "job");
  try {
    JobSpec job;
    const Json& field = doc.at("field");
    if (!field.is_object()) throw ParseError("field must be an object");
    reject_unknown(field, {"kind", "p"}, "field");
    const std::string kind = field.at("kind").get<std::string>();
    if (kind == "rationals") {
      if (field.contains("p")) throw ParseError("field of kind rationals takes no p");
      job.field = FieldSpec::rationals();
    } else if (kind == "prime") {
      const std::string p = scalar_text(field.at("p"), "field.p");
      if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; }) || p.size() > 19) {
        throw ParseError("field.p must be a positive decimal integer");
      }
      job.field = FieldSpec::prime(std::stoull(p));
    } else {
      throw ParseError("field.kind must be \"rationals\" or \"prime\"");
    }

    job.dimension = count_field(doc, "dimension");

    const Json& braiding = doc.at("braiding");
    if (!braiding.is_object()) throw ParseError("braiding must be an object");
    const std::string bkind = braiding.at("kind").get<std::string>();
    if (bkind == "flip") {
      reject_unknown(braiding, {"kind"}, "braiding");
      job.braiding.kind = BraidingDescriptor::Kind::Flip;
    } else if (bkind == "diagonal") {
      reject_unknown(braiding, {"kind", "q"}, "braiding");
      job.braiding.kind = BraidingDescriptor::Kind::Diagonal;
      job.braiding.entries = scalar_matrix(braiding.at("q"), "braiding.q");
    } else if (bkind == "matrix") {
      reject_unknown(braiding, {"kind", "entries"}, "braiding");
      job.braiding.kind = BraidingDescriptor::Kind::Matrix;
      job.braiding.entries = scalar_matrix(braiding.at("entries"), "braiding.entries");
    } else {
      throw ParseError("braiding.kind must be \"flip\", \"diagonal\" or \"matrix\"");
    }

    if (doc.contains("degree_cutoff")) job.degree_cutoff = count_field(doc, "degree_cutoff");
    if (doc.contains("max_iter")) job.max_iter = count_field(doc, "max_iter");
    if (doc.contains("oracle")) {
      if (!doc.at("oracle").is_boolean()) throw ParseError("oracle must be a boolean");
      job.oracle = doc.at("oracle").get<bool>();
    }
    return job;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("job document: ") + e.what());
  }
}

template <FieldScalar T>
BraidedSpace<T> build_space(const JobSpec& job) {
  const bool rational = std::is_same_v<T, Rational>;
  if (job.field.is_rationals() != rational) throw ConfigMismatch("scalar type does not match the job's field");
  const std::size_t n = job.dimension;
  switch (job.braiding.kind) {
    case BraidingDescriptor::Kind::Flip:
      if (n == 0) throw DimensionMismatch("braided vector space of dimension 0");
      if (n > kMaxDimension) throw EnvelopeExceeded("dimension " + std::to_string(n) + " exceeds the cap");
      return BraidedSpace<T>::flip(n, job.field);
    case BraidingDescriptor::Kind::Diagonal:
      return BraidedSpace<T>::diagonal(parse_matrix<T>(job.field, job.braiding.entries, n, "braiding.q"));
    case BraidingDescriptor::Kind::Matrix:
      if (n > kMaxDimension) throw EnvelopeExceeded("dimension " + std::to_string(n) + " exceeds the cap");
      return BraidedSpace<T>::from_matrix(n, parse_matrix<T>(job.field, job.braiding.entries, n * n, "braiding.entries"));
  }
  throw ParseError("unknown braiding kind");
}

// ----------------------------------------------------------------- reports

template <FieldScalar T>
RankSummary summarize(const RankReport<T>& report) {
  return {report.rank_le_cutoff, report.stabilized, report.stages, report.final.hilbert_series(),
          report.oracle_match};
}

Json to_json(const RankSummary& s) {
  Json doc;
  doc["rank_le_cutoff"] = s.rank_le_cutoff ? Json(*s.rank_le_cutoff) : Json(nullptr);
  doc["stabilized"] = s.stabilized;
  Json stages = Json::array();
  for (const StageReport& r : s.stages) {
    Json stage;
    stage["hilbert"] = r.hilbert;
    stage["new_relation_dims"] = r.new_relation_dims;
    stage["iso"] = r.iso;
    stages.push_back(std::move(stage));
  }
  doc["stages"] = std::move(stages);
  doc["final_hilbert"] = s.final_hilbert;
  doc["oracle_match"] = s.oracle_match ? Json(*s.oracle_match) : Json(nullptr);
  return doc;
}

RankSummary summary_from_json(const Json& doc) {
  try {
    RankSummary s;
    if (!doc.at("rank_le_cutoff").is_null()) s.rank_le_cutoff = doc.at("rank_le_cutoff").get<std::size_t>();
    s.stabilized = doc.at("stabilized").get<bool>();
    std::size_t index = 0;
    for (const Json& stage : doc.at("stages")) {
      StageReport r;
      r.index = index++;
      r.hilbert = stage.at("hilbert").get<std::vector<std::size_t>>();
      r.new_relation_dims = stage.at("new_relation_dims").get<std::vector<std::size_t>>();
      r.iso = stage.at("iso").get<bool>();
      s.stages.push_back(std::move(r));
    }
    s.final_hilbert = doc.at("final_hilbert").get<std::vector<std::size_t>>();
    if (!doc.at("oracle_match").is_null()) s.oracle_match = doc.at("oracle_match").get<bool>();
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("rank report: ") + e.what());
  }
}

template <FieldScalar T>
std::string render_tensor(std::span<const T> v, std::size_t n, std::size_t d) {
  std::string out;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t].is_zero()) continue;
    std::string label(d, '0');
    std::size_t rest = t;
    for (std::size_t p = d; p-- > 0;) {
      label[p] = static_cast<char>('0' + rest % n);
      rest /= n;
    }
    const std::string text = v[t].to_string();
    const bool negative = text.front() == '-';
    const std::string magnitude = negative ? text.substr(1) : text;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != "1") out += magnitude + "*";
    out += "e" + label;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------------- cache

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

template <FieldScalar T>
std::string cache_key(const BraidedSpace<T>& space, std::size_t cutoff) {
  std::ostringstream s;
  s << space.field().to_string() << ";n=" << space.dimension() << ";D=" << cutoff << ";c=";
  const Matrix<T>& c = space.braiding();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) s << (i || j ? "," : "") << c(i, j).to_string();
  }
  return s.str();
}

template <FieldScalar T>
DirectoryCache<T>::DirectoryCache(fs::path dir, const BraidedSpace<T>& space, std::size_t cutoff)
    : key_(cache_key(space, cutoff)), field_(space.field()), n_(space.dimension()) {
  dir_ = std::move(dir) / fnv1a_hex(key_);
  fs::create_directories(dir_);
}

template <FieldScalar T>
fs::path DirectoryCache<T>::file_for(std::size_t index) const {
  return dir_ / ("stage_" + std::to_string(index) + ".json");
}

template <FieldScalar T>
std::optional<CachedStep<T>> DirectoryCache<T>::load(std::size_t index) {
  std::ifstream f(file_for(index), std::ios::binary);
  if (!f) return std::nullopt;
  try {
    const Json doc = Json::parse(read_all(f));
    if (doc.at("key").get<std::string>() != key_ || doc.at("stage").get<std::size_t>() != index) return std::nullopt;
    CachedStep<T> entry;
    const Json& report = doc.at("report");
    entry.report.index = index;
    entry.report.hilbert = report.at("hilbert").get<std::vector<std::size_t>>();
    entry.report.new_relation_dims = report.at("new_relation_dims").get<std::vector<std::size_t>>();
    entry.report.iso = report.at("iso").get<bool>();
    std::size_t d = 0;
    for (const Json& rel : doc.at("relations")) {
      ++d;
      const std::size_t ambient = tensor_dimension(n_, d);
      const Json& rows = rel.at("rows");
      Matrix<T> basis(field_, rows.size(), ambient);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const Json& term : rows[r]) {
          const std::size_t col = term.at(0).get<std::size_t>();
          if (col >= ambient) return std::nullopt;
          basis(r, col) = T::parse(term.at(1).get<std::string>(), field_);
        }
      }
      entry.next_relations.push_back(rows.empty() ? Subspace<T>::zero(field_, ambient) : Subspace<T>::span(basis));
    }
    ++hits_;
    return entry;
  } catch (const Json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

template <FieldScalar T>
void DirectoryCache<T>::store(std::size_t index, const CachedStep<T>& entry) {
  Json doc;
  doc["key"] = key_;
  doc["stage"] = index;
  Json report;
  report["hilbert"] = entry.report.hilbert;
  report["new_relation_dims"] = entry.report.new_relation_dims;
  report["iso"] = entry.report.iso;
  doc["report"] = std::move(report);
  Json relations = Json::array();
  for (const Subspace<T>& r : entry.next_relations) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < r.dim(); ++k) {
      Json row = Json::array();
      auto v = r.basis_vector(k);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) row.push_back(Json::array({j, v[j].to_string()}));
      }
      rows.push_back(std::move(row));
    }
    Json rel;
    rel["rows"] = std::move(rows);
    relations.push_back(std::move(rel));
  }
  doc["relations"] = std::move(relations);
  write_atomically(file_for(index), doc.dump());
}

// --------------------------------------------------------------------- CLI

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Nichols-algebra towers and combinatorial rank"};
  app.require_subcommand(1);
  Options opt;
  std::optional<std::size_t> cutoff;
  std::optional<std::size_t> max_iter;
  std::optional<std::size_t> degree;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Job JSON file (default: stdin)");
    sub->add_option("--cutoff", cutoff, "Override degree_cutoff");
    sub->add_option("--max-iter", max_iter, "Override max_iter");
    sub->add_flag("--oracle", opt.oracle, "Compare with the symmetrizer oracle");
    sub->add_option("--cache", opt.cache, "Stage cache directory");
    sub->add_flag("--json", opt.json, "Machine-readable output");
  };
  add_common(app.add_subcommand("check", "Validate the braiding"));
  add_common(app.add_subcommand("rank", "Run the tower and report the rank at the cutoff"));
  add_common(app.add_subcommand("nichols", "Compare the stabilized tower with the oracle"));
  CLI::App* prim = app.add_subcommand("primitives", "Primitive elements of one stage and degree");
  add_common(prim);
  prim->add_option("--stage", opt.stage, "Stage index (default 0)");
  prim->add_option("--degree", degree, "Tensor degree")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  }
  opt.cutoff = cutoff;
  opt.max_iter = max_iter;
  opt.degree = degree;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::string text;
    if (opt.input.empty()) {
      text = read_all(in);
    } else {
      std::ifstream f(opt.input, std::ios::binary);
      if (!f) throw ParseError("cannot read " + opt.input);
      text = read_all(f);
    }
    JobSpec job = parse_job(text);
    if (opt.cutoff) job.degree_cutoff = *opt.cutoff;
    if (opt.max_iter) job.max_iter = *opt.max_iter;
    if (opt.oracle) job.oracle = true;
    if (!opt.cache.empty()) job.cache_dir = opt.cache;
    if (command != "check" && job.degree_cutoff == 0) throw ParseError("degree_cutoff missing (or pass --cutoff)");
    if (!job.max_iter) job.max_iter = job.degree_cutoff;

    if (job.field.is_rationals()) return dispatch<Rational>(command, job, opt, out);
    return dispatch<ModP>(command, job, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const YangBaxterViolation& e) {
    const auto w = e.witness();
    if (opt.json) {
      Json doc;
      doc["valid"] = false;
      doc["error"] = e.what();
      doc["witness"] = {w[0], w[1], w[2]};
      out << doc.dump(2) << "\n";
    } else {
      out << "invalid: witness e" << w[0] << " (x) e" << w[1] << " (x) e" << w[2] << "\n";
    }
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    if (opt.json && command == "check") {
      Json doc;
      doc["valid"] = false;
      doc["error"] = e.what();
      out << doc.dump(2) << "\n";
    }
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

template BraidedSpace<Rational> build_space(const JobSpec&);
template BraidedSpace<ModP> build_space(const JobSpec&);
template RankSummary summarize(const RankReport<Rational>&);
template RankSummary summarize(const RankReport<ModP>&);
template std::string render_tensor(std::span<const Rational>, std::size_t, std::size_t);
template std::string render_tensor(std::span<const ModP>, std::size_t, std::size_t);
template std::string cache_key(const BraidedSpace<Rational>&, std::size_t);
template std::string cache_key(const BraidedSpace<ModP>&, std::size_t);
template class DirectoryCache<Rational>;
template class DirectoryCache<ModP>;

}  // namespace nichols::cli
