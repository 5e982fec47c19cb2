//! Grayscale images with double-precision intensities in `[0, 1]`.
//!
//! Pixels are stored row-major. File I/O supports binary and ASCII PGM at 8
//! or 16 bits and grayscale PNG; everything is converted to `f64` on load.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

/// A `height × width` grayscale image, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl Image {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::param("image dimensions must be positive"));
        }
        if data.len() != height * width {
            return Err(Error::dim(format!(
                "data length {} does not match {height}x{width}",
                data.len()
            )));
        }
        Ok(Image {
            height,
            width,
            data,
        })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Image {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn constant(height: usize, width: usize, value: f64) -> Self {
        Image {
            height,
            width,
            data: vec![value; height * width],
        }
    }

    /// Builds an image from a function of (row, col).
    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                data.push(f(r, c));
            }
        }
        Image {
            height,
            width,
            data,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    /// Replaces the pixel data, keeping the dimensions.
    pub fn with_data(&self, data: Vec<f64>) -> Result<Self> {
        Image::new(self.height, self.width, data)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.width + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.width + c] = v;
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Image {
            height: self.height,
            width: self.width,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn same_dims(&self, other: &Image) -> bool {
        self.height == other.height && self.width == other.width
    }

    pub fn check_same_dims(&self, other: &Image, what: &str) -> Result<()> {
        if !self.same_dims(other) {
            return Err(Error::dim(format!(
                "{what}: {}x{} vs {}x{}",
                self.height, self.width, other.height, other.width
            )));
        }
        Ok(())
    }

    /// A deterministic synthetic test scene: a smooth ramp background with
    /// two disks, a rectangle, and a soft bump. Piecewise-smooth with sharp
    /// edges, which is the regime kernel denoisers are designed for.
    /// Intensities lie in `[0.05, 0.95]`.
    pub fn synthetic_phantom(height: usize, width: usize) -> Self {
        let h = height as f64;
        let w = width as f64;
        // Soft step over roughly one pixel so edges are not aliased.
        let edge = |signed_dist: f64| -> f64 {
            let t = (signed_dist + 0.5).clamp(0.0, 1.0);
            t * t * (3.0 - 2.0 * t)
        };
        Image::from_fn(height, width, |r, c| {
            let y = r as f64;
            let x = c as f64;
            let mut v = 0.25 + 0.20 * (y / h + x / w) / 2.0;

            // Bright disk.
            let d1 = ((y - 0.38 * h).powi(2) + (x - 0.34 * w).powi(2)).sqrt();
            v += (0.85 - v) * edge(0.21 * w.min(h) - d1);

            // Dark disk overlapping the ramp.
            let d2 = ((y - 0.72 * h).powi(2) + (x - 0.68 * w).powi(2)).sqrt();
            v += (0.15 - v) * edge(0.13 * w.min(h) - d2);

            // Rectangle in the upper right corner.
            let in_rect = (y - 0.12 * h).min(0.30 * h - y).min(x - 0.62 * w).min(0.92 * w - x);
            v += (0.65 - v) * edge(in_rect);

            // Smooth bump in the lower left.
            let d3 = (y - 0.78 * h).powi(2) + (x - 0.22 * w).powi(2);
            v += 0.25 * (-d3 / (0.012 * (h * w))).exp();

            v.clamp(0.05, 0.95)
        })
    }

    /// Loads a PGM or PNG image by file extension.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        match path.extension().and_then(|e| e.to_str()) {
            Some("pgm") => Image::read_pgm(&fs::read(path)?),
            Some("png") => {
                let img = image::open(path)
                    .map_err(|e| Error::ImageFormat(format!("{}: {e}", path.display())))?;
                Ok(match img {
                    image::DynamicImage::ImageLuma16(buf) => {
                        let (w, h) = (buf.width() as usize, buf.height() as usize);
                        let data = buf.pixels().map(|p| p.0[0] as f64 / 65535.0).collect();
                        Image::new(h, w, data)?
                    }
                    other => {
                        let buf = other.to_luma8();
                        let (w, h) = (buf.width() as usize, buf.height() as usize);
                        let data = buf.pixels().map(|p| p.0[0] as f64 / 255.0).collect();
                        Image::new(h, w, data)?
                    }
                })
            }
            _ => Err(Error::ImageFormat(format!(
                "unsupported image extension: {}",
                path.display()
            ))),
        }
    }

    /// Saves as PGM or PNG by file extension, 8-bit, clamping to `[0, 1]`.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        match path.extension().and_then(|e| e.to_str()) {
            Some("pgm") => {
                let mut f = fs::File::create(path)?;
                f.write_all(&self.to_pgm_bytes(8)?)?;
                Ok(())
            }
            Some("png") => {
                let buf: Vec<u8> = self.data.iter().map(|&v| quantize_u8(v)).collect();
                image::save_buffer(
                    path,
                    &buf,
                    self.width as u32,
                    self.height as u32,
                    image::ColorType::L8,
                )
                .map_err(|e| Error::ImageFormat(format!("{}: {e}", path.display())))
            }
            _ => Err(Error::ImageFormat(format!(
                "unsupported image extension: {}",
                path.display()
            ))),
        }
    }

    /// Encodes as binary PGM (`P5`) with 8- or 16-bit samples.
    pub fn to_pgm_bytes(&self, bits: u8) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        match bits {
            8 => {
                out.extend_from_slice(format!("P5\n{} {}\n255\n", self.width, self.height).as_bytes());
                out.extend(self.data.iter().map(|&v| quantize_u8(v)));
            }
            16 => {
                out.extend_from_slice(
                    format!("P5\n{} {}\n65535\n", self.width, self.height).as_bytes(),
                );
                for &v in &self.data {
                    let q = (v.clamp(0.0, 1.0) * 65535.0).round() as u16;
                    out.extend_from_slice(&q.to_be_bytes());
                }
            }
            _ => return Err(Error::param("PGM bit depth must be 8 or 16")),
        }
        Ok(out)
    }

    /// Decodes a binary (`P5`) or ASCII (`P2`) PGM image.
    pub fn read_pgm(bytes: &[u8]) -> Result<Self> {
        let mut header = PgmTokens::new(bytes);
        let magic = header.token()?;
        if magic != b"P5" && magic != b"P2" {
            return Err(Error::ImageFormat("not a PGM file".into()));
        }
        let width: usize = header.number()?;
        let height: usize = header.number()?;
        let maxval: usize = header.number()?;
        if width == 0 || height == 0 || maxval == 0 || maxval > 65535 {
            return Err(Error::ImageFormat("invalid PGM header".into()));
        }
        let scale = maxval as f64;
        let n = width * height;
        let data = if magic == b"P2" {
            let mut data = Vec::with_capacity(n);
            for _ in 0..n {
                data.push(header.number()? as f64 / scale);
            }
            data
        } else {
            // One whitespace byte separates the header from binary samples.
            let start = header.pos + 1;
            if maxval < 256 {
                let raw = bytes
                    .get(start..start + n)
                    .ok_or_else(|| Error::ImageFormat("truncated PGM data".into()))?;
                raw.iter().map(|&b| b as f64 / scale).collect()
            } else {
                let raw = bytes
                    .get(start..start + 2 * n)
                    .ok_or_else(|| Error::ImageFormat("truncated PGM data".into()))?;
                raw.chunks_exact(2)
                    .map(|c| u16::from_be_bytes([c[0], c[1]]) as f64 / scale)
                    .collect()
            }
        };
        Image::new(height, width, data)
    }
}

fn quantize_u8(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Whitespace/comment-aware tokenizer for PGM headers.
struct PgmTokens<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PgmTokens<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        PgmTokens { bytes, pos: 0 }
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
                continue;
            }
            break;
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::ImageFormat("unexpected end of PGM header".into()));
        }
        // Leave pos on the delimiter so binary payloads can be located.
        self.pos -= 1;
        let tok = &self.bytes[start..=self.pos];
        Ok(tok)
    }

    fn number(&mut self) -> Result<usize> {
        let tok = self.token()?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::ImageFormat("malformed number in PGM header".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgm_roundtrip_8bit() {
        let img = Image::synthetic_phantom(13, 9);
        let bytes = img.to_pgm_bytes(8).unwrap();
        let back = Image::read_pgm(&bytes).unwrap();
        assert_eq!(back.dims(), (13, 9));
        for (a, b) in img.as_slice().iter().zip(back.as_slice()) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }

    #[test]
    fn pgm_roundtrip_16bit() {
        let img = Image::synthetic_phantom(8, 8);
        let bytes = img.to_pgm_bytes(16).unwrap();
        let back = Image::read_pgm(&bytes).unwrap();
        for (a, b) in img.as_slice().iter().zip(back.as_slice()) {
            assert!((a - b).abs() <= 0.5 / 65535.0 + 1e-12);
        }
    }

    #[test]
    fn ascii_pgm_with_comments() {
        let text = b"P2\n# a comment\n3 2\n255\n0 128 255\n64 32 16\n";
        let img = Image::read_pgm(text).unwrap();
        assert_eq!(img.dims(), (2, 3));
        assert!((img.get(0, 1) - 128.0 / 255.0).abs() < 1e-12);
        assert!((img.get(1, 2) - 16.0 / 255.0).abs() < 1e-12);
    }

    #[test]
    fn phantom_is_deterministic_and_in_range() {
        let a = Image::synthetic_phantom(64, 64);
        let b = Image::synthetic_phantom(64, 64);
        assert_eq!(a, b);
        assert!(a.as_slice().iter().all(|&v| (0.05..=0.95).contains(&v)));
        // It must not be constant, otherwise it is useless as a test scene.
        let mean = a.as_slice().iter().sum::<f64>() / a.len() as f64;
        let var = a.as_slice().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / a.len() as f64;
        assert!(var > 1e-3);
    }

    #[test]
    fn png_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("img.png");
        let img = Image::synthetic_phantom(10, 12);
        img.save(&path).unwrap();
        let back = Image::load(&path).unwrap();
        assert_eq!(back.dims(), (10, 12));
        for (a, b) in img.as_slice().iter().zip(back.as_slice()) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }

    #[test]
    fn dimension_validation() {
        assert!(Image::new(2, 2, vec![0.0; 3]).is_err());
        assert!(Image::new(0, 2, vec![]).is_err());
    }
}
