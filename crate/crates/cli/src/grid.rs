//! `--grid` syntax: comma-separated `m:n` or `m:lo-hi` cells,
//! e.g. `1:2-5,2:2-4,3:2-3,4:2-3`.

pub fn parse_grid(text: &str) -> Result<Vec<(u32, usize)>, String> {
    let mut cells = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (m, ns) = part
            .split_once(':')
            .ok_or_else(|| format!("grid cell `{part}` is not of the form m:n or m:lo-hi"))?;
        let m: u32 = m
            .trim()
            .parse()
            .map_err(|_| format!("bad slope `{m}` in grid cell `{part}`"))?;
        let (lo, hi) = match ns.split_once('-') {
            Some((lo, hi)) => (lo, hi),
            None => (ns, ns),
        };
        let parse_n = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad height `{s}` in grid cell `{part}`"))
        };
        let (lo, hi) = (parse_n(lo)?, parse_n(hi)?);
        if m == 0 || lo == 0 || lo > hi {
            return Err(format!("empty or invalid grid cell `{part}`"));
        }
        cells.extend((lo..=hi).map(|n| (m, n)));
    }
    if cells.is_empty() {
        return Err("grid is empty".into());
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_spelling() {
        let cells = parse_grid("1:2-5,2:2-4,3:2-3,4:2-3").unwrap();
        assert_eq!(cells, mtamari::DEFAULT_GRID);
    }

    #[test]
    fn single_cells_and_errors() {
        assert_eq!(parse_grid("2:3").unwrap(), vec![(2, 3)]);
        assert!(parse_grid("").is_err());
        assert!(parse_grid("2").is_err());
        assert!(parse_grid("0:3").is_err());
        assert!(parse_grid("2:4-3").is_err());
        assert!(parse_grid("x:1").is_err());
    }
}
