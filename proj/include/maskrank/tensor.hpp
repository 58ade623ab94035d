#pragma once

#include "maskrank/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace maskrank {

/// Dense row-major array of doubles with an explicit shape. This is the
/// carrier for everything that crosses a file boundary; in-memory math runs
/// on Eigen views obtained from matrix()/reshaped().
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<std::size_t> shape_in, std::vector<double> data_in);

  static Tensor zeros(std::vector<std::size_t> shape_in);
  static Tensor from_matrix(const Matrix& m);

  std::size_t rank() const { return shape.size(); }
  std::size_t size() const;

  /// Rank-2 view over the data. Throws ShapeError unless rank() == 2.
  Eigen::Map<const Matrix> matrix() const;

  /// View with an arbitrary 2-D factorization of the same element count
  /// (e.g. a d x H x W feature map viewed as d x HW).
  Eigen::Map<const Matrix> reshaped(Index rows, Index cols) const;

  /// Rank-1 view. Throws ShapeError unless rank() == 1.
  Eigen::Map<const Vector> vector() const;

  /// Checks shape/data agreement and that every value is finite.
  void validate(const std::string& origin = "tensor") const;
};

/// Binary tensor file: magic "MTEN", version byte, u8 rank, rank x u32
/// little-endian dims, then row-major IEEE-754 little-endian doubles.
void save_tensor(const Tensor& t, const std::string& path);

/// Loads a tensor file. The binary format is detected via its magic bytes;
/// anything else is parsed as the JSON alternative
/// {"shape": [...], "data": [...]}.
Tensor load_tensor(const std::string& path);

/// Parses the JSON fixture form from an in-memory string.
Tensor tensor_from_json_text(const std::string& text, const std::string& origin);

}  // namespace maskrank
