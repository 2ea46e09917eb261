#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pairedkernel.h"

namespace {

const char* kPair =
    R"({"a": {"conj": {"poly": {"coeffs": [[0,0],[0,0],[0,0],[1,0]]}}}, "b": {"poly": {"coeffs": [[1,0]]}}})";

}  // namespace

TEST_CASE("version string") { CHECK(std::strcmp(pk_version(), "0.1.0") == 0); }

TEST_CASE("kernel round trip through the C surface") {
  pk_report* report = nullptr;
  pk_status s = pk_kernel(kPair, nullptr, &report);
  REQUIRE(s == PK_OK);
  REQUIRE(report != nullptr);
  std::string text = pk_report_json(report);
  CHECK(text.find("\"dim\":3") != std::string::npos);
  CHECK(text.find("\"oracle_dim\":3") != std::string::npos);
  pk_report_free(report);
}

TEST_CASE("status codes") {
  pk_report* report = nullptr;
  SUBCASE("parse errors") {
    CHECK(pk_kernel("{not json", nullptr, &report) == PK_ERR_PARSE);
    CHECK(report == nullptr);
    CHECK(std::string(pk_last_error()).find("invalid JSON") != std::string::npos);
  }
  SUBCASE("schema errors") {
    CHECK(pk_kernel(R"({"a": {"poly": {}}, "b": {"poly": {"coeffs": [[1,0]]}}})", nullptr,
                    &report) == PK_ERR_PARSE);
    CHECK(std::string(pk_last_error()).find("pair.a.poly") != std::string::npos);
  }
  SUBCASE("degenerate pairs") {
    const char* degenerate =
        R"({"a": {"poly": {"coeffs": [[1,0],[1,0]]}}, "b": {"poly": {"coeffs": [[1,0],[1,0]]}}})";
    CHECK(pk_kernel(degenerate, nullptr, &report) == PK_ERR_PRECONDITION);
  }
  SUBCASE("verification mismatch from a corrupted claim") {
    std::string req = kPair;
    req.pop_back();
    req +=
        R"(, "claim": {"dim": 1, "factor": {"num": {"leading": [1,0], "roots": [{"z": [3,0], "mult": 1}]}, "den": {"leading": [1,0], "roots": []}}}})";
    pk_status s = pk_verify(req.c_str(), nullptr, &report);
    CHECK(s == PK_ERR_VERIFY);
    REQUIRE(report != nullptr);  // report still produced
    CHECK(std::string(pk_report_json(report)).find("\"match\":false") != std::string::npos);
    pk_report_free(report);
  }
  SUBCASE("alpha precondition") {
    const char* spec =
        R"({"theta": {"zeros": [{"z": [0,0], "mult": 5}]}, "alpha": {"zeros": [{"z": [0,0], "mult": 1}]},
           "r_plus": {"rational": {"num": {"poly": {"coeffs": [[1,0]]}}, "den": {"poly": {"coeffs": [[-2,0],[1,0]]}}}},
           "r_minus": {"rational": {"num": {"poly": {"coeffs": [[1,0]]}}, "den": {"poly": {"coeffs": [[0,0],[1,0]]}}}},
           "points": []})";
    CHECK(pk_atto(spec, nullptr, &report) == PK_ERR_PRECONDITION);
    CHECK(std::string(pk_last_error()).find("AlphaTooSmall") != std::string::npos);
  }
}

TEST_CASE("atto through the C surface") {
  const char* spec =
      R"({"theta": {"zeros": [{"z": [0,0], "mult": 5}]}, "alpha": {"zeros": [{"z": [0,0], "mult": 4}]},
         "r_plus": {"rational": {"num": {"poly": {"coeffs": [[1,0]]}}, "den": {"poly": {"coeffs": [[-2,0],[1,0]]}}}},
         "r_minus": {"rational": {"num": {"poly": {"coeffs": [[1,0]]}}, "den": {"poly": {"coeffs": [[0,0],[1,0]]}}}},
         "points": []})";
  pk_report* report = nullptr;
  pk_status s = pk_atto(spec, R"({"alpha_check": true})", &report);
  REQUIRE(s == PK_OK);
  std::string text = pk_report_json(report);
  CHECK(text.find("\"dim\":3") != std::string::npos);
  CHECK(text.find("\"m\":2") != std::string::npos);
  CHECK(text.find("\"alpha_check\":{") != std::string::npos);
  pk_report_free(report);
}

TEST_CASE("minimal through the C surface") {
  const char* request =
      R"({"a": {"atom": {"point": [-1,0], "mass": 1, "exp": -1}}, "b": {"poly": {"coeffs": [[1,0],[1,0]]}}})";
  pk_report* report = nullptr;
  pk_status s = pk_minimal(request, nullptr, &report);
  REQUIRE(s == PK_OK);
  CHECK(std::string(pk_report_json(report)).find("z^-1*atom((-1,0),1)^-1") != std::string::npos);
  pk_report_free(report);
}

TEST_CASE("decompose through the C surface") {
  pk_report* report = nullptr;
  pk_status s = pk_decompose(kPair, 2, nullptr, &report);
  REQUIRE(s == PK_OK);
  CHECK(std::string(pk_report_json(report)).find("\"k\":2") != std::string::npos);
  pk_report_free(report);
}
