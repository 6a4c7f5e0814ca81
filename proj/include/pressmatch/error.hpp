#pragma once

#include <stdexcept>
#include <string>

namespace pressmatch {

// Base for every error the library raises.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input file missing, unreadable or structurally broken.
class IoError : public Error {
public:
  using Error::Error;
};

// A precondition on arguments was violated.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// Text scored as non-English while the English filter was on.
class NonEnglishText : public Error {
public:
  explicit NonEnglishText(double score)
      : Error("text rejected by English language filter (score " + std::to_string(score) + ")"),
        score_(score) {}
  double score() const noexcept { return score_; }

private:
  double score_;
};

// A query produced no usable terms in the model's vocabulary.
class NoSignal : public Error {
public:
  using Error::Error;
};

}  // namespace pressmatch
