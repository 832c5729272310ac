//! graph6 codec for graphs on at most 16 vertices.
//!
//! Layout: one size byte (63 + n), then ceil(n(n-1)/12) data bytes. Each
//! data byte holds six upper-triangle bits (column-major: x01, x02, x12,
//! x03, ...), most significant bit first, zero-padded, offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - k);
            }
        }
        out.push((63 + value) as char);
    }
    out
}

pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim();
    if line.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if let Some(rest) = line.strip_prefix(">>graph6<<") {
        return decode(rest);
    }
    if line.starts_with(':') {
        return Err(Error::Graph6("sparse6 is not supported".into()));
    }
    if line.starts_with('&') {
        return Err(Error::Graph6("digraph6 is not supported".into()));
    }
    let bytes = line.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {bad} outside the printable range [63,126]"
        )));
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() < needed {
        return Err(Error::Graph6(format!(
            "truncated bit field: need {needed} data bytes for n={n}, got {}",
            data.len()
        )));
    }
    if data.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing data bytes after the bit field",
            data.len() - needed
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hand_encoded_small_graphs() {
        // K2: size byte 63+2=65 ('A'); the single edge bit padded to
        // 100000 = 32, so the data byte is 63+32=95 ('_').
        assert_eq!(encode(&complete(2)), "A_");
        assert_eq!(decode("A_").unwrap(), complete(2));
        // P3 with edges 01 and 12: bits (x01,x02,x12) = (1,0,1) padded to
        // 101000 = 40, data byte 63+40=103 ('g'); size byte 'B'.
        assert_eq!(encode(&path(3)), "Bg");
        assert_eq!(decode("Bg").unwrap(), path(3));
    }

    #[test]
    fn round_trip_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=16);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let line = encode(&g);
            assert_eq!(decode(&line).unwrap(), g, "round trip failed for {line}");
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(decode("").is_err());
        assert!(decode(":Bg").is_err());
        assert!(decode("&Bg").is_err());
        assert!(decode("B").is_err()); // truncated
        assert!(decode("Bgg").is_err()); // trailing data
        assert!(decode("B\u{1f}").is_err()); // byte below 63
        // 17 vertices is out of range
        let too_big = ((63 + 17) as u8 as char).to_string();
        assert!(decode(&too_big).is_err());
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(decode(">>graph6<<A_").unwrap(), complete(2));
    }
}
