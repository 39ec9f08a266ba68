// Copyright 2026 The clinwer Authors
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

#ifndef CLINWER_ERRORS_H_
#define CLINWER_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clinwer {

// Base of every error the library throws. Data errors (malformed input,
// violated preconditions) and I/O errors are kept apart so the CLI can map
// them to distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Reference side has no words after normalization, so WER is undefined.
class EmptyReference : public DataError {
 public:
  explicit EmptyReference(const std::string& pair_id)
      : DataError("empty reference: " + pair_id), pair_id_(pair_id) {}
  EmptyReference(const std::string& pair_id, const std::string& message)
      : DataError(message), pair_id_(pair_id) {}
  const std::string& pair_id() const { return pair_id_; }

 private:
  std::string pair_id_;
};

class FormatError : public DataError {
 public:
  FormatError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateUtterance : public DataError {
 public:
  using DataError::DataError;
};

class EmptyAfterCleaning : public DataError {
 public:
  using DataError::DataError;
};

class EmptyCorpus : public DataError {
 public:
  using DataError::DataError;
};

class UnknownPmid : public DataError {
 public:
  explicit UnknownPmid(const std::string& pmid)
      : DataError("paraphrase given for unknown pmid " + pmid), pmid_(pmid) {}
  const std::string& pmid() const { return pmid_; }

 private:
  std::string pmid_;
};

class TooFewExamples : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace clinwer

#endif  // CLINWER_ERRORS_H_
