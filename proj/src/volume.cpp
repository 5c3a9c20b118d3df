#include "ktrecon/volume.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ktrecon/errors.hpp"
#include "ktrecon/fft.hpp"
#include "ktrecon/kernels.hpp"

namespace ktrecon {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::ImageTime: return "image-time";
    case Domain::ImageTempFreq: return "image-tempfreq";
    case Domain::KspaceTime: return "kspace-time";
  }
  return "image-time";
}

Domain domain_from_name(const std::string& name) {
  if (name == "image-time") return Domain::ImageTime;
  if (name == "image-tempfreq") return Domain::ImageTempFreq;
  if (name == "kspace-time") return Domain::KspaceTime;
  throw IoError("unknown volume domain '" + name + "'");
}

double ComplexVolume::max_abs() const {
  const double m2 = kern::active().max_abs2_c(
      reinterpret_cast<const double*>(data.data()), data.size());
  return std::sqrt(m2);
}

double ComplexVolume::norm2() const {
  const double* p = reinterpret_cast<const double*>(data.data());
  return std::sqrt(kern::active().dot(p, p, 2 * data.size()));
}

namespace {

void check_nonempty(const ComplexVolume& v) {
  if (v.frames == 0 || v.height == 0 || v.width == 0 ||
      v.data.size() != v.size()) {
    throw ShapeMismatchError("volume dimensions must be >= 1 and consistent");
  }
}

ComplexVolume spatial_transform(const ComplexVolume& v, bool inverse, Domain out_domain) {
  check_nonempty(v);
  ComplexVolume out = v;
  out.domain = out_domain;
  const std::size_t frame_len = v.height * v.width;
  kern::parallel_for(v.frames, [&](std::size_t t0, std::size_t t1) {
    for (std::size_t t = t0; t < t1; ++t) {
      Complex* frame = out.data.data() + t * frame_len;
      for (std::size_t h = 0; h < v.height; ++h) {
        fft::centered_line(frame + h * v.width, v.width, 1, inverse);
      }
      for (std::size_t w = 0; w < v.width; ++w) {
        fft::centered_line(frame + w, v.height, v.width, inverse);
      }
    }
  });
  return out;
}

ComplexVolume temporal_transform(const ComplexVolume& v, bool inverse, Domain out_domain) {
  check_nonempty(v);
  ComplexVolume out = v;
  out.domain = out_domain;
  const std::size_t frame_len = v.height * v.width;
  kern::parallel_for(frame_len, [&](std::size_t p0, std::size_t p1) {
    for (std::size_t p = p0; p < p1; ++p) {
      fft::centered_line(out.data.data() + p, v.frames, frame_len, inverse);
    }
  });
  return out;
}

}  // namespace

ComplexVolume spatial_fft2c(const ComplexVolume& v) {
  return spatial_transform(v, false, Domain::KspaceTime);
}

ComplexVolume spatial_ifft2c(const ComplexVolume& v) {
  return spatial_transform(v, true, Domain::ImageTime);
}

ComplexVolume temporal_fft1c(const ComplexVolume& v) {
  return temporal_transform(v, false, Domain::ImageTempFreq);
}

ComplexVolume temporal_ifft1c(const ComplexVolume& v) {
  return temporal_transform(v, true, Domain::ImageTime);
}

NormalizeResult normalize(const ComplexVolume& v) {
  check_nonempty(v);
  const double peak = v.max_abs();
  if (peak == 0.0) throw ZeroVolumeError();
  NormalizeResult r{v, peak};
  kern::active().scale(reinterpret_cast<double*>(r.volume.data.data()),
                       1.0 / peak, 2 * r.volume.data.size());
  return r;
}

void save_volume(const ComplexVolume& v, const std::string& path, double scale) {
  check_nonempty(v);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  char head[256];
  std::snprintf(head, sizeof(head),
                "ktv 1\ndomain %s\nframes %zu\nheight %zu\nwidth %zu\nscale %.17g\ndata\n",
                domain_name(v.domain), v.frames, v.height, v.width, scale);
  f << head;
  std::vector<float> payload(2 * v.data.size());
  for (std::size_t i = 0; i < v.data.size(); ++i) {
    payload[2 * i] = static_cast<float>(v.data[i].real());
    payload[2 * i + 1] = static_cast<float>(v.data[i].imag());
  }
  f.write(reinterpret_cast<const char*>(payload.data()),
          static_cast<std::streamsize>(payload.size() * sizeof(float)));
  if (!f) throw IoError("short write to '" + path + "'");
}

LoadedVolume load_volume(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line) || line != "ktv 1") {
    throw IoError("malformed volume header in '" + path + "': bad magic");
  }
  std::size_t frames = 0, height = 0, width = 0;
  double scale = 1.0;
  Domain domain = Domain::ImageTime;
  bool saw_data = false;
  while (std::getline(f, line)) {
    if (line == "data") {
      saw_data = true;
      break;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "domain") {
      std::string val;
      ls >> val;
      domain = domain_from_name(val);
    } else if (key == "frames") {
      ls >> frames;
    } else if (key == "height") {
      ls >> height;
    } else if (key == "width") {
      ls >> width;
    } else if (key == "scale") {
      ls >> scale;
    } else {
      throw IoError("malformed volume header in '" + path + "': key '" + key + "'");
    }
    if (ls.fail()) throw IoError("malformed volume header in '" + path + "'");
  }
  if (!saw_data || frames == 0 || height == 0 || width == 0) {
    throw IoError("malformed volume header in '" + path + "'");
  }
  LoadedVolume out;
  out.scale = scale;
  out.volume = ComplexVolume(frames, height, width, domain);
  std::vector<float> payload(2 * out.volume.size());
  f.read(reinterpret_cast<char*>(payload.data()),
         static_cast<std::streamsize>(payload.size() * sizeof(float)));
  if (f.gcount() != static_cast<std::streamsize>(payload.size() * sizeof(float))) {
    throw IoError("truncated volume payload in '" + path + "'");
  }
  for (std::size_t i = 0; i < out.volume.size(); ++i) {
    out.volume.data[i] = {static_cast<double>(payload[2 * i]),
                          static_cast<double>(payload[2 * i + 1])};
  }
  return out;
}

}  // namespace ktrecon
