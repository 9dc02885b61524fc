#pragma once

#include <stdexcept>
#include <string>

namespace degroot {

// Base class for every exception thrown by this library.
// All indices carried by error objects are 0-based.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotSquare : public Error {
 public:
  explicit NotSquare(const std::string& msg) : Error(msg) {}
};

class NonFiniteEntry : public Error {
 public:
  NonFiniteEntry(int row, int col)
      : Error("non-finite entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row(row),
        col(col) {}
  int row;
  int col;
};

class NegativeEntry : public Error {
 public:
  NegativeEntry(int row, int col, double value)
      : Error("negative entry " + std::to_string(value) + " at (" +
              std::to_string(row) + ", " + std::to_string(col) + ")"),
        row(row),
        col(col),
        value(value) {}
  int row;
  int col;
  double value;
};

class RowSumOutOfTolerance : public Error {
 public:
  RowSumOutOfTolerance(int row, double sum)
      : Error("row " + std::to_string(row) + " sums to " +
              std::to_string(sum) + ", not 1"),
        row(row),
        sum(sum) {}
  int row;
  double sum;
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class NotUnique : public Error {
 public:
  explicit NotUnique(int nu)
      : Error("stationary vector is not unique: " + std::to_string(nu) +
              " closed influence classes"),
        nu(nu) {}
  int nu;
};

class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

class InfeasibleRow : public Error {
 public:
  InfeasibleRow(int vertex, double incoming)
      : Error("incoming weight " + std::to_string(incoming) + " at vertex " +
              std::to_string(vertex) + " exceeds 1"),
        vertex(vertex),
        incoming(incoming) {}
  int vertex;
  double incoming;
};

class InconsistentLoop : public Error {
 public:
  InconsistentLoop(int vertex, double loop, double completion)
      : Error("loop weight " + std::to_string(loop) + " at vertex " +
              std::to_string(vertex) + " contradicts completion " +
              std::to_string(completion)),
        vertex(vertex),
        loop(loop),
        completion(completion) {}
  int vertex;
  double loop;
  double completion;
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

class NoSpanningTree : public Error {
 public:
  NoSpanningTree() : Error("digraph has no spanning out-tree") {}
};

class NonPositiveTarget : public Error {
 public:
  NonPositiveTarget(int index, double value)
      : Error("target tree weight " + std::to_string(value) + " at index " +
              std::to_string(index) + " is not positive"),
        index(index),
        value(value) {}
  int index;
  double value;
};

class NonPositivePi : public Error {
 public:
  NonPositivePi(int index, double value)
      : Error("weight distribution entry " + std::to_string(value) +
              " at index " + std::to_string(index) + " is not positive"),
        index(index),
        value(value) {}
  int index;
  double value;
};

class BetaOutOfRange : public Error {
 public:
  BetaOutOfRange(double beta, double max_beta)
      : Error("beta " + std::to_string(beta) + " outside (0, " +
              std::to_string(max_beta) + "]"),
        beta(beta),
        max_beta(max_beta) {}
  double beta;
  double max_beta;
};

class WeightAboveOne : public Error {
 public:
  WeightAboveOne(int index, double value)
      : Error("entering weight " + std::to_string(value) + " at vertex " +
              std::to_string(index) + " exceeds 1"),
        index(index),
        value(value) {}
  int index;
  double value;
};

class DegenerateN : public Error {
 public:
  explicit DegenerateN(int n)
      : Error("cycle synthesis needs at least 2 vertices, got " +
              std::to_string(n)),
        n(n) {}
  int n;
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace degroot
