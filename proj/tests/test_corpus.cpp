#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qpot/corpus.hpp"
#include "qpot/error.hpp"

using namespace qpot;
namespace fs = std::filesystem;

TEST_CASE("every corpus case matches its expected output") {
  VerifyReport rep = verify_all(corpus_dir());
  CHECK(rep.total == 30);
  for (const auto& r : rep.results) {
    INFO(r.name << ": " << r.message);
    CHECK(r.match);
  }
  CHECK(rep.failures == 0);
}

TEST_CASE("corrupting one expected file yields exactly one failure with a diff") {
  fs::path tmp = fs::temp_directory_path() / "qpot_corpus_fault";
  fs::remove_all(tmp);
  fs::copy(corpus_dir(), tmp, fs::copy_options::recursive);
  {
    std::ofstream out(tmp / "gz25_reduce" / "expected.txt");
    out << "z1*T^{v1} + z2*T^{v2-1}\n";
  }
  VerifyReport rep = verify_all(tmp.string());
  CHECK(rep.total == 30);
  CHECK(rep.failures == 1);
  for (const auto& r : rep.results) {
    if (r.name != "gz25_reduce") {
      CHECK(r.match);
      continue;
    }
    CHECK_FALSE(r.match);
    CHECK(r.message.find("unexpected term") != std::string::npos);
    CHECK(r.message.find("2*z1^-1*T^{2-v1}") != std::string::npos);
  }
  fs::remove_all(tmp);
}

TEST_CASE("empty corpus reports zero cases") {
  fs::path tmp = fs::temp_directory_path() / "qpot_corpus_empty";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  VerifyReport rep = verify_all(tmp.string());
  CHECK(rep.total == 0);
  CHECK(rep.failures == 0);
  fs::remove_all(tmp);
}

TEST_CASE("unknown case and unknown run kind") {
  CHECK_THROWS_WITH_AS(run_case(corpus_dir(), "no_such_case"),
                       doctest::Contains("UnknownCase"), Error);
  CHECK_THROWS_AS(run_input(Json::parse(R"({"run": "explode"})")), Error);
}
