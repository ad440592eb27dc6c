#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "fsc/errors.hpp"
#include "fsc/field.hpp"
#include "fsc/grid.hpp"

namespace fsc {

// FLD1 layout is fixed; see field.hpp.  This code assumes a little-endian
// host (checked at runtime) and writes scalar types directly.

namespace {

void ensure_little_endian() {
  const std::uint32_t probe = 1;
  unsigned char byte;
  std::memcpy(&byte, &probe, 1);
  if (byte != 1) throw NumericalError("FLD1 I/O requires a little-endian host");
}

template <typename T>
void put(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::istream& is, const std::string& what) {
  T value{};
  is.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!is) throw MissingArtifactError("FLD1 file truncated while reading " + what);
  return value;
}

}  // namespace

void write_fld1(const std::string& path, const Field2D& field) {
  ensure_little_endian();
  if (!is_power_of_two(field.n) ||
      field.data.size() != static_cast<std::size_t>(field.n) * field.n)
    throw NumericalError("refusing to write malformed field");

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw MissingArtifactError("cannot open " + path + " for writing");
  os.write("FLD1", 4);
  put<std::uint32_t>(os, 1u);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(field.n));
  put<double>(os, field.box_size);
  put<std::uint64_t>(os, field.seed.value_or(0));
  const std::uint32_t p =
      field.params ? static_cast<std::uint32_t>(field.params->values.size()) : 0u;
  put<std::uint32_t>(os, p);
  if (field.params)
    for (double v : field.params->values) put<double>(os, v);
  for (double v : field.data) put<float>(os, static_cast<float>(v));
  if (!os) throw MissingArtifactError("short write to " + path);
}

Field2D read_fld1(const std::string& path) {
  ensure_little_endian();
  std::ifstream is(path, std::ios::binary);
  if (!is) throw MissingArtifactError("cannot open " + path);

  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "FLD1", 4) != 0)
    throw MissingArtifactError(path + ": bad FLD1 magic");
  const auto version = take<std::uint32_t>(is, "version");
  if (version != 1)
    throw MissingArtifactError(path + ": unsupported FLD1 version " +
                               std::to_string(version));

  Field2D field;
  const auto n = take<std::uint32_t>(is, "grid side");
  if (n == 0 || n > (1u << 16) || !is_power_of_two(static_cast<int>(n)))
    throw MissingArtifactError(path + ": invalid grid side");
  field.n = static_cast<int>(n);
  field.box_size = take<double>(is, "box_size");
  const auto seed = take<std::uint64_t>(is, "seed");
  field.seed = seed;
  const auto p = take<std::uint32_t>(is, "parameter count");
  if (p > 0) {
    ParamVector params;
    params.values.reserve(p);
    for (std::uint32_t i = 0; i < p; ++i)
      params.values.push_back(take<double>(is, "parameter value"));
    field.params = std::move(params);
  }
  const std::size_t npix = static_cast<std::size_t>(field.n) * field.n;
  field.data.resize(npix);
  for (std::size_t i = 0; i < npix; ++i)
    field.data[i] = static_cast<double>(take<float>(is, "field data"));
  return field;
}

}  // namespace fsc
