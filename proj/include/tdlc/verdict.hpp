#pragma once

#include <json.hpp>

#include <string>
#include <utility>

namespace tdlc {

using Json = nlohmann::ordered_json;

enum class Answer { Yes, No, Undecided };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "undecided";
  }
}

// Three-valued decision. Yes/No carry a certificate that an independent
// checker can validate; Undecided records which resource bound ran out.
struct Verdict {
  Answer answer = Answer::Undecided;
  Json certificate;
  std::string reason;

  bool yes() const { return answer == Answer::Yes; }
  bool no() const { return answer == Answer::No; }
  bool decided() const { return answer != Answer::Undecided; }

  static Verdict make_yes(Json cert, std::string why = "") {
    return Verdict{Answer::Yes, std::move(cert), std::move(why)};
  }
  static Verdict make_no(Json cert, std::string why = "") {
    return Verdict{Answer::No, std::move(cert), std::move(why)};
  }
  static Verdict make_undecided(std::string bound) {
    return Verdict{Answer::Undecided, Json::object(), std::move(bound)};
  }

  Json to_json() const {
    Json j;
    j["answer"] = to_string(answer);
    j["certificate"] = certificate;
    j["reason"] = reason;
    return j;
  }
};

}  // namespace tdlc
