#pragma once

#include <stdexcept>
#include <string>

namespace hrg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the documented domain of an operation.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured vertex/element capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A vertex set passed as a clique is not actually a clique.
class NonCliqueError : public Error {
 public:
  using Error::Error;
};

/// Two graphs combined by a part-aligned operation have different part counts.
class PartCountMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a pure complex encountered a face with no
/// top-dimensional extension.
class NotPureError : public Error {
 public:
  using Error::Error;
};

/// A bipartite operation requiring constant side degrees found unequal ones.
class NotBiregularError : public Error {
 public:
  using Error::Error;
};

/// A group-family operation was invoked on a handle of a different family.
class UnsupportedFamilyError : public Error {
 public:
  using Error::Error;
};

/// A candidate normal subgroup is not closed under conjugation.
class NotNormalError : public Error {
 public:
  using Error::Error;
};

/// An explicit structure-preserving bijection failed verification.
class BijectionFailureError : public Error {
 public:
  using Error::Error;
};

/// A point set refers to points outside the permutation domain.
class PointsOutsideDomainError : public Error {
 public:
  using Error::Error;
};

/// A symmetrization prediction came out type-dependent: the acting group
/// does not carry every type set of some size onto a common value.
class NotSetTransitiveError : public Error {
 public:
  using Error::Error;
};

/// File input/output or format violation.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a connected graph received a disconnected one.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// The requested analytic bound is undefined for the given parameters.
class BoundUndefinedError : public Error {
 public:
  using Error::Error;
};

/// Default capacity for constructed vertex/element sets.  Reads the HRG_CAP
/// environment variable once; falls back to 10^7.
std::int64_t default_capacity();

}  // namespace hrg
