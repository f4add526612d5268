#ifndef CERTREC_VERTEX_ORDER_HPP
#define CERTREC_VERTEX_ORDER_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace certrec {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// A total ordering of the vertices 0..n-1 with O(1) position lookup.
class VertexOrder {
 public:
  VertexOrder() = default;

  /// Throws std::invalid_argument unless `sequence` is a permutation of 0..size-1.
  explicit VertexOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)), pos_(seq_.size(), kNoVertex) {
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      Vertex v = seq_[i];
      if (v < 0 || static_cast<std::size_t>(v) >= seq_.size())
        throw std::invalid_argument("vertex order: id " + std::to_string(v) + " out of range");
      if (pos_[v] != kNoVertex)
        throw std::invalid_argument("vertex order: id " + std::to_string(v) + " repeated");
      pos_[v] = static_cast<Vertex>(i);
    }
  }

  static VertexOrder identity(Vertex n) {
    std::vector<Vertex> s(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) s[i] = i;
    return VertexOrder(std::move(s));
  }

  Vertex size() const { return static_cast<Vertex>(seq_.size()); }
  bool empty() const { return seq_.empty(); }
  Vertex operator[](Vertex index) const { return seq_[index]; }
  Vertex position(Vertex v) const { return pos_[v]; }
  bool before(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }
  std::span<const Vertex> sequence() const { return seq_; }
  auto begin() const { return seq_.begin(); }
  auto end() const { return seq_.end(); }

  /// The mirror ordering.
  VertexOrder reversed() const {
    VertexOrder r;
    r.seq_.assign(seq_.rbegin(), seq_.rend());
    r.pos_.resize(pos_.size());
    const Vertex last = size() - 1;
    for (std::size_t v = 0; v < pos_.size(); ++v) r.pos_[v] = last - pos_[v];
    return r;
  }

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<Vertex> pos_;
};

inline VertexOrder reverse(const VertexOrder& order) { return order.reversed(); }

}  // namespace certrec

#endif  // CERTREC_VERTEX_ORDER_HPP
