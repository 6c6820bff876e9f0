#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rtac/instance_io.hpp"
#include "test_support.hpp"

using namespace rtac;

TEST_CASE("serialization is compact, ordered and newline-terminated") {
  CHECK(to_json(testing::eq2()) == "{\"n\":2,\"d\":2,\"constraints\":[{\"x\":0,\"y\":1,\"allowed\":[[0,0]]}]}\n");
  CHECK(to_json(CspInstance(3, 2, {})) == "{\"n\":3,\"d\":2,\"constraints\":[]}\n");

  // Unsorted input normalizes to the same bytes.
  const CspInstance shuffled(3, 2, {{1, 2, {{0, 0}}}, {0, 1, {{1, 1}, {0, 0}}}});
  CHECK(to_json(shuffled) ==
        "{\"n\":3,\"d\":2,\"constraints\":[{\"x\":0,\"y\":1,\"allowed\":[[0,0],[1,1]]},"
        "{\"x\":1,\"y\":2,\"allowed\":[[0,0]]}]}\n");

  const GenConfig cfg{2, 2, 0.5, 0.25, 7};
  CHECK(to_json(testing::eq2(), cfg) ==
        "{\"n\":2,\"d\":2,\"constraints\":[{\"x\":0,\"y\":1,\"allowed\":[[0,0]]}],"
        "\"gen\":{\"n\":2,\"d\":2,\"density\":0.5,\"tightness\":0.25,\"seed\":7,\"prng\":\"splitmix64\"}}\n");
}

TEST_CASE("parsing") {
  const auto doc = parse_instance(" {\"d\":2, \"n\":2, \"constraints\":[{\"y\":1,\"x\":0,\"allowed\":[[0,0]]}]}");
  CHECK(doc.instance == testing::eq2());
  CHECK_FALSE(doc.gen.has_value());

  CHECK_THROWS_AS(parse_instance("{"), FormatError);
  CHECK_THROWS_AS(parse_instance("[]"), FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":2,\"d\":2}"), FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":-2,\"d\":2,\"constraints\":[]}"), FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":2,\"d\":2,\"constraints\":[{\"x\":1,\"y\":0,\"allowed\":[]}]}"),
                  FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":2,\"d\":2,\"constraints\":[{\"x\":0,\"y\":1,\"allowed\":[[0]]}]}"),
                  FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":2,\"d\":2,\"constraints\":[{\"x\":0,\"y\":1,\"allowed\":[[0,5]]}]}"),
                  FormatError);
  CHECK_THROWS_AS(parse_instance("{\"n\":2,\"d\":2,\"constraints\":[],\"gen\":{\"n\":2,\"d\":2,\"density\":0.5,"
                                 "\"tightness\":0.5,\"seed\":1,\"prng\":\"mt19937\"}}"),
                  FormatError);
}

TEST_CASE("file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "rtac_io_roundtrip.json";
  write_instance_file(path, testing::path3());
  CHECK(read_instance_file(path).instance == testing::path3());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_instance_file(path), FormatError);
}
