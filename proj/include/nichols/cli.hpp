#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nichols/tower.hpp"

namespace nichols::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kParseFailure = 2, kNotStabilized = 3 };

struct BraidingDescriptor {
  enum class Kind { Flip, Diagonal, Matrix };
  Kind kind = Kind::Flip;
  /// q matrix (n x n) for Diagonal, c (n^2 x n^2) for Matrix; scalar text.
  std::vector<std::vector<std::string>> entries;
};

struct JobSpec {
  FieldSpec field = FieldSpec::rationals();
  std::size_t dimension = 0;
  BraidingDescriptor braiding;
  /// 0 when absent from the document.
  std::size_t degree_cutoff = 0;
  /// Defaults to degree_cutoff when absent.
  std::optional<std::size_t> max_iter;
  bool oracle = false;
  std::optional<std::filesystem::path> cache_dir;
};

/// Throws ParseError on malformed JSON, unknown or missing keys, and
/// floating-point scalars.
JobSpec parse_job(const std::string& text);

/// Throws the braiding module's validation errors.
template <FieldScalar T>
BraidedSpace<T> build_space(const JobSpec& job);

/// The machine-readable rank report; stage order is stage index.
struct RankSummary {
  std::optional<std::size_t> rank_le_cutoff;
  bool stabilized = false;
  std::vector<StageReport> stages;
  std::vector<std::size_t> final_hilbert;
  std::optional<bool> oracle_match;

  friend bool operator==(const RankSummary&, const RankSummary&) = default;
};

template <FieldScalar T>
RankSummary summarize(const RankReport<T>& report);

Json to_json(const RankSummary& summary);
/// Inverse of to_json; throws ParseError on a document of the wrong shape.
RankSummary summary_from_json(const Json& doc);

/// "e01 - e10" style rendering of a vector of V^{(x)d}.
template <FieldScalar T>
std::string render_tensor(std::span<const T> v, std::size_t n, std::size_t d);

/// Canonical text of (field, braiding entries, cutoff) and its FNV-1a hash.
template <FieldScalar T>
std::string cache_key(const BraidedSpace<T>& space, std::size_t cutoff);
std::string fnv1a_hex(const std::string& text);

/// One JSON file per finished step under dir/<hash>/; writes go through a
/// temporary file and a rename.
template <FieldScalar T>
class DirectoryCache : public StageCache<T> {
 public:
  DirectoryCache(std::filesystem::path dir, const BraidedSpace<T>& space, std::size_t cutoff);

  std::optional<CachedStep<T>> load(std::size_t index) override;
  void store(std::size_t index, const CachedStep<T>& entry) override;

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::size_t hits() const noexcept { return hits_; }

 private:
  std::filesystem::path file_for(std::size_t index) const;

  std::filesystem::path dir_;
  std::string key_;
  FieldSpec field_;
  std::size_t n_;
  std::size_t hits_ = 0;
};

/// Entry point shared by the binary and the tests; args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

extern template BraidedSpace<Rational> build_space(const JobSpec&);
extern template BraidedSpace<ModP> build_space(const JobSpec&);
extern template RankSummary summarize(const RankReport<Rational>&);
extern template RankSummary summarize(const RankReport<ModP>&);
extern template std::string render_tensor(std::span<const Rational>, std::size_t, std::size_t);
extern template std::string render_tensor(std::span<const ModP>, std::size_t, std::size_t);
extern template std::string cache_key(const BraidedSpace<Rational>&, std::size_t);
extern template std::string cache_key(const BraidedSpace<ModP>&, std::size_t);
extern template class DirectoryCache<Rational>;
extern template class DirectoryCache<ModP>;

}  // namespace nichols::cli
