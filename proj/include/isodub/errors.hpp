// Copyright 2026 The isodub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isodub {

// Base class for every failure this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (SRT, lexicon, rule, config files).
// Carries a 1-based line number when one is known; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Unsupported or malformed binary container (e.g. a non-PCM WAV).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Structurally valid container whose payload is cut short or inconsistent.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

// The caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A structure fails its own invariants (e.g. serializing an invalid track).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Placeholder bookkeeping went wrong between wrap and unwrap.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage failed for a specific cue. Earlier cues' outputs survive.
class StageError : public Error {
 public:
  StageError(int cue_index, const std::string& stage, const std::string& why)
      : Error("cue " + std::to_string(cue_index) + ": " + stage +
              " stage failed: " + why),
        cue_index_(cue_index),
        stage_(stage) {}
  int cue_index() const noexcept { return cue_index_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  int cue_index_;
  std::string stage_;
};

}  // namespace isodub
