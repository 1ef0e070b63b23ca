#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <curl/curl.h>

#include "simpdeg/error.hpp"
#include "simpdeg/ingest.hpp"

namespace simpdeg {

namespace fs = std::filesystem;

namespace {

std::size_t write_to_file(char* data, std::size_t size, std::size_t count, void* user) {
  auto* out = static_cast<std::ofstream*>(user);
  out->write(data, static_cast<std::streamsize>(size * count));
  return out->good() ? size * count : 0;
}

/// Returns the HTTP status; the body lands in `target` only on 200.
long download(const std::string& url, const fs::path& target) {
  static const bool initialized = [] { return curl_global_init(CURL_GLOBAL_DEFAULT) == CURLE_OK; }();
  if (!initialized) throw IoError("libcurl initialization failed");

  const fs::path partial = target.string() + ".part";
  std::ofstream out(partial, std::ios::binary);
  if (!out) throw IoError("cannot write " + partial.string());

  CURL* curl = curl_easy_init();
  if (!curl) throw IoError("libcurl handle allocation failed");
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, write_to_file);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &out);
  const CURLcode rc = curl_easy_perform(curl);
  long status = 0;
  curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
  curl_easy_cleanup(curl);
  out.close();

  if (rc != CURLE_OK) {
    fs::remove(partial);
    throw IoError("download of " + url + " failed: " + curl_easy_strerror(rc));
  }
  if (status != 200) {
    fs::remove(partial);
    return status;
  }
  fs::rename(partial, target);
  return status;
}

}  // namespace

fs::path fetch_dataset(const std::string& name, const fs::path& dest, std::optional<std::string> base) {
  if (!base) {
    const char* env = std::getenv("SIMPDEG_DATA_URL");
    if (!env || !*env) throw IoError("no dataset URL: set SIMPDEG_DATA_URL or pass a base URL");
    base = env;
  }
  while (!base->empty() && base->back() == '/') base->pop_back();

  const fs::path dir = dest / name;
  fs::create_directories(dir);
  for (const char* suffix : {"nverts", "simplices", "times", "node-labels"}) {
    const std::string file = name + "-" + suffix + ".txt";
    if (fs::exists(dir / file)) continue;
    const long status = download(*base + "/" + name + "/" + file, dir / file);
    const bool optional = std::string(suffix) == "node-labels";
    if (status != 200 && !optional)
      throw IoError("download of " + file + " returned HTTP " + std::to_string(status));
  }
  return dir;
}

}  // namespace simpdeg
