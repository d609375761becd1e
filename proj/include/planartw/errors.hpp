#pragma once

#include <stdexcept>
#include <string>

namespace planartw {

struct NotPlanarError : std::runtime_error {
  explicit NotPlanarError(const std::string& m = "graph is not planar")
      : std::runtime_error(m) {}
};

struct NotTriconnectedError : std::runtime_error {
  explicit NotTriconnectedError(const std::string& m = "graph is not triconnected")
      : std::runtime_error(m) {}
};

struct NotBiconnectedError : std::runtime_error {
  explicit NotBiconnectedError(const std::string& m = "graph is not biconnected")
      : std::runtime_error(m) {}
};

struct DisconnectedError : std::runtime_error {
  explicit DisconnectedError(const std::string& m = "graph is disconnected")
      : std::runtime_error(m) {}
};

// The latching construction found a second edge between the same vertex
// pair; happens exactly when the base graph is not triconnected.
struct MultiEdgeError : std::runtime_error {
  explicit MultiEdgeError(const std::string& m = "latching graph is not simple")
      : std::runtime_error(m) {}
};

struct InvalidEmbeddingError : std::runtime_error {
  explicit InvalidEmbeddingError(const std::string& m)
      : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& m = "input too large for brute force")
      : std::runtime_error(m) {}
};

// The treewidth DP could not cover some block; the supplied PMC set was
// not all of Pi(G).
struct IncompletePmcSetError : std::runtime_error {
  explicit IncompletePmcSetError(const std::string& m = "PMC set incomplete")
      : std::runtime_error(m) {}
};

}  // namespace planartw
