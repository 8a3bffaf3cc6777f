#ifndef CTM_FIELD_HPP
#define CTM_FIELD_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ctm {

enum class Dtype { f32le, f64le };

Dtype parse_dtype(const std::string& s);
std::string to_string(Dtype d);
std::size_t byte_width(Dtype d);

// An n-dimensional grid of real values, row-major with the slowest-varying
// dimension first. Values are held as doubles regardless of the source dtype.
struct ScalarField {
  std::string name;
  std::vector<std::size_t> dims;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  std::size_t rank() const { return dims.size(); }
};

// Throws DataError unless 1 <= rank <= 3 and every extent is positive.
void validate_dims(const std::vector<std::size_t>& dims);
std::size_t element_count(const std::vector<std::size_t>& dims);

// Headerless little-endian raw array (SDRBench convention). The file size
// must equal product(dims) * byte_width(dtype); non-finite payloads are
// rejected.
ScalarField load_raw(const std::filesystem::path& path,
                     const std::vector<std::size_t>& dims, Dtype dtype,
                     const std::string& name = "");

// Inverse of load_raw for tests and dataset generation. f32 output narrows.
void write_raw(const ScalarField& field, Dtype dtype,
               const std::filesystem::path& path);

enum class SynthKind { smooth, banded, uniform_noise, constant };

SynthKind parse_synth_kind(const std::string& s);
std::string to_string(SynthKind k);

// Deterministic synthetic fields for calibration and tests.
//   smooth        high spatial autocorrelation, residuals concentrate near 0
//   banded        piecewise-constant bands along the slowest axis
//   uniform_noise i.i.d. uniform values, near-zero autocorrelation
//   constant      all zeros
ScalarField synth_field(SynthKind kind, const std::vector<std::size_t>& dims,
                        std::uint64_t seed);

struct ManifestEntry {
  std::string path;
  std::vector<std::size_t> dims;
  Dtype dtype = Dtype::f32le;
  std::string name;
};

// Manifest CSV columns: path,dims,dtype,name with dims like 64x64x64.
// Relative paths resolve against the manifest's directory.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

ScalarField load_entry(const ManifestEntry& e);

std::vector<std::size_t> parse_dims(const std::string& s, char sep = ',');

}  // namespace ctm

#endif
