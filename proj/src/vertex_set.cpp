#include "codedim/vertex_set.hpp"

#include <string>

#include "codedim/error.hpp"

namespace codedim {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxRepresentableVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex count " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxRepresentableVertices) + "]");
  }
}

void check_vertex(int n, int vertex) {
  if (vertex < 1 || vertex > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(vertex) + " outside [1, " +
                    std::to_string(n) + "]");
  }
}

}  // namespace

VertexSet::VertexSet(int n, Bits bits) : bits_(bits), n_(n) {
  check_ambient(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit pattern has members beyond n = " + std::to_string(n));
  }
}

VertexSet VertexSet::full(int n) {
  check_ambient(n);
  return VertexSet(n, low_mask(n));
}

VertexSet VertexSet::of(int n, std::initializer_list<int> vertices) {
  return of(n, std::vector<int>(vertices));
}

VertexSet VertexSet::of(int n, const std::vector<int>& vertices) {
  check_ambient(n);
  Bits bits = 0;
  for (int v : vertices) {
    check_vertex(n, v);
    bits |= Bits{1} << (v - 1);
  }
  return VertexSet(n, bits);
}

VertexSet VertexSet::with(int vertex) const {
  check_vertex(n_, vertex);
  return VertexSet(n_, bits_ | (Bits{1} << (vertex - 1)));
}

VertexSet VertexSet::without(int vertex) const {
  check_vertex(n_, vertex);
  return VertexSet(n_, bits_ & ~(Bits{1} << (vertex - 1)));
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kInvalidArgument, "ambient vertex counts differ");
  }
  return VertexSet(n_, bits_ & other.bits_);
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::kInvalidArgument, "ambient vertex counts differ");
  }
  return VertexSet(n_, bits_ | other.bits_);
}

VertexSet VertexSet::complement() const {
  return VertexSet(n_, ~bits_ & low_mask(n_));
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (Bits rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string VertexSet::to_binary() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string VertexSet::to_braces() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace codedim
