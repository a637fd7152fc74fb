// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstring>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgprof {

// Pulls lines out of a byte stream, transparently inflating gzip input
// (detected by the 1f 8b magic). Byte offsets refer to the uncompressed
// stream. Memory use is bounded by the chunk size plus the current line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {
    int c0 = in_.get();
    int c1 = in_.get();
    if (c0 == 0x1f && c1 == 0x8b) {
      gzip_ = true;
      in_.clear();
      in_.seekg(0);
      if (in_.fail()) throw std::runtime_error("gzip input stream is not seekable");
      std::memset(&strm_, 0, sizeof(strm_));
      // 15+32: zlib auto-detects gzip or raw zlib headers.
      if (inflateInit2(&strm_, 15 + 32) != Z_OK)
        throw std::runtime_error("inflateInit failed");
      zlib_open_ = true;
    } else {
      if (c1 != EOF) in_.putback(static_cast<char>(c1));
      if (c0 != EOF) in_.putback(static_cast<char>(c0));
    }
  }

  ~LineReader() {
    if (zlib_open_) inflateEnd(&strm_);
  }

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  // Next line without its terminator; strips a trailing CR. Returns false at
  // end of input. `offset` is the byte offset of the line start.
  bool next(std::string& line, uint64_t& offset) {
    line.clear();
    offset = pos_;
    bool saw_data = false;
    while (true) {
      if (buf_pos_ == buf_.size() && !fill()) break;
      saw_data = true;
      const char* data = buf_.data() + buf_pos_;
      size_t avail = buf_.size() - buf_pos_;
      const char* nl = static_cast<const char*>(std::memchr(data, '\n', avail));
      if (nl) {
        size_t n = static_cast<size_t>(nl - data);
        line.append(data, n);
        buf_pos_ += n + 1;
        pos_ += n + 1;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
      }
      line.append(data, avail);
      buf_pos_ += avail;
      pos_ += avail;
    }
    if (!saw_data && line.empty()) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }

  bool gzip() const { return gzip_; }

 private:
  bool fill() {
    if (gzip_) return fill_gzip();
    buf_.resize(kChunk);
    in_.read(buf_.data(), kChunk);
    std::streamsize n = in_.gcount();
    buf_.resize(static_cast<size_t>(n));
    buf_pos_ = 0;
    return n > 0;
  }

  bool fill_gzip() {
    if (stream_done_) return false;
    buf_.resize(kChunk);
    strm_.next_out = reinterpret_cast<Bytef*>(buf_.data());
    strm_.avail_out = kChunk;
    while (strm_.avail_out == kChunk) {
      if (strm_.avail_in == 0) {
        in_.read(zin_.data(), static_cast<std::streamsize>(zin_.size()));
        std::streamsize n = in_.gcount();
        if (n == 0) {
          stream_done_ = true;
          break;
        }
        strm_.next_in = reinterpret_cast<Bytef*>(zin_.data());
        strm_.avail_in = static_cast<uInt>(n);
      }
      int rc = inflate(&strm_, Z_NO_FLUSH);
      if (rc == Z_STREAM_END) {
        // Support concatenated gzip members.
        if (strm_.avail_in > 0 || in_.peek() != EOF) {
          if (inflateReset2(&strm_, 15 + 32) != Z_OK) {
            stream_done_ = true;
            break;
          }
        } else {
          stream_done_ = true;
          break;
        }
      } else if (rc != Z_OK) {
        throw std::runtime_error(std::string("gzip inflate error: ") +
                                 (strm_.msg ? strm_.msg : "corrupt stream"));
      }
    }
    buf_.resize(kChunk - strm_.avail_out);
    buf_pos_ = 0;
    return !buf_.empty();
  }

  static constexpr size_t kChunk = 1 << 16;

  std::istream& in_;
  bool gzip_ = false;
  bool zlib_open_ = false;
  bool stream_done_ = false;
  z_stream strm_{};
  std::vector<char> zin_ = std::vector<char>(kChunk);
  std::string buf_;
  size_t buf_pos_ = 0;
  uint64_t pos_ = 0;
};

}  // namespace kgprof
