#ifndef OPINION_MINER_TESTS_TEST_SUPPORT_H_
#define OPINION_MINER_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <random>
#include <string>

namespace opinion_miner::testing {

inline std::filesystem::path fixture(const std::string &relative) {
  return std::filesystem::path(OPINION_MINER_FIXTURES) / relative;
}

inline std::filesystem::path data_file(const std::string &name) {
  return std::filesystem::path(OPINION_MINER_DATA) / name;
}

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("opinion_miner_" + tag + "_" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace opinion_miner::testing

#endif  // OPINION_MINER_TESTS_TEST_SUPPORT_H_
