/* Copyright 2026 The hitkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "image_io.hpp"

#include <png.h>
#include <stdio.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include <jpeglib.h>

#include "error.hpp"

namespace hitkit {

namespace {

using FilePtr = std::unique_ptr<FILE, decltype(&std::fclose)>;

FilePtr OpenFile(const std::filesystem::path& path, const char* mode) {
  return FilePtr(std::fopen(path.c_str(), mode), &std::fclose);
}

Image8 ReadPng(const std::filesystem::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    ThrowIo(path.string() + ": " + png.message);
  }
  png.format = PNG_FORMAT_RGB;
  Image8 out{static_cast<int>(png.height), static_cast<int>(png.width), 3, {}};
  out.pixels.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, out.pixels.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    ThrowIo(path.string() + ": " + msg);
  }
  return out;
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void JpegErrorExit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

// Everything between setjmp and the end of this function must be trivially
// destructible; callers own the buffers.
bool DecodeJpeg(FILE* file, Image8& out, char* message) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = JpegErrorExit;
  if (setjmp(err.jump)) {
    std::strcpy(message, err.message);
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, file);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);
  out.height = static_cast<int>(cinfo.output_height);
  out.width = static_cast<int>(cinfo.output_width);
  out.channels = 3;
  out.pixels.resize(static_cast<std::size_t>(out.height) * out.width * 3);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = &out.pixels[static_cast<std::size_t>(cinfo.output_scanline) *
                               out.width * 3];
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

Image8 ReadJpeg(const std::filesystem::path& path) {
  FilePtr file = OpenFile(path, "rb");
  if (!file) ThrowIo("cannot open " + path.string());
  Image8 out;
  char message[JMSG_LENGTH_MAX] = {0};
  if (!DecodeJpeg(file.get(), out, message)) {
    ThrowIo(path.string() + ": " + message);
  }
  return out;
}

bool EncodeJpeg(FILE* file, const Image8& img, int quality, char* message) {
  jpeg_compress_struct cinfo;
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = JpegErrorExit;
  if (setjmp(err.jump)) {
    std::strcpy(message, err.message);
    jpeg_destroy_compress(&cinfo);
    return false;
  }
  jpeg_create_compress(&cinfo);
  jpeg_stdio_dest(&cinfo, file);
  cinfo.image_width = static_cast<JDIMENSION>(img.width);
  cinfo.image_height = static_cast<JDIMENSION>(img.height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<JSAMPROW>(
        &img.pixels[static_cast<std::size_t>(cinfo.next_scanline) * img.width * 3]);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  return true;
}

void RequireConsistent(const Image8& img) {
  if (img.height < 1 || img.width < 1 ||
      img.pixels.size() != static_cast<std::size_t>(img.height) * img.width *
                               img.channels) {
    ThrowInvalid("8-bit image buffer does not match its shape");
  }
}

}  // namespace

Image8 ReadImage8(const std::filesystem::path& path) {
  std::array<unsigned char, 8> magic{};
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) ThrowIo("cannot open " + path.string());
    in.read(reinterpret_cast<char*>(magic.data()), magic.size());
    if (in.gcount() < 3) ThrowIo(path.string() + ": file too short");
  }
  if (png_sig_cmp(magic.data(), 0, magic.size()) == 0) return ReadPng(path);
  if (magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF) return ReadJpeg(path);
  ThrowIo(path.string() + ": not a PNG or JPEG file");
}

Image ReadImage(const std::filesystem::path& path) {
  return ToImage(ReadImage8(path));
}

void WritePng(const std::filesystem::path& path, const Image8& img) {
  RequireConsistent(img);
  if (img.channels != 1 && img.channels != 3) {
    ThrowInvalid("PNG output supports 1 or 3 channels");
  }
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width);
  png.height = static_cast<png_uint_32>(img.height);
  png.format = img.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png, path.c_str(), 0, img.pixels.data(), 0,
                               nullptr)) {
    ThrowIo(path.string() + ": " + png.message);
  }
}

void WriteJpeg(const std::filesystem::path& path, const Image8& img,
               int quality) {
  RequireConsistent(img);
  if (img.channels != 3) ThrowInvalid("JPEG output requires 3 channels");
  if (quality < 1 || quality > 100) ThrowInvalid("JPEG quality must be in [1, 100]");
  FilePtr file = OpenFile(path, "wb");
  if (!file) ThrowIo("cannot create " + path.string());
  char message[JMSG_LENGTH_MAX] = {0};
  if (!EncodeJpeg(file.get(), img, quality, message)) {
    ThrowIo(path.string() + ": " + message);
  }
}

bool HasImageExtension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace hitkit
