use serde::Serialize;

/// One command's output in both formats.
pub struct Rendered {
    pub json: String,
    pub text: String,
}

impl Rendered {
    pub fn new<T: Serialize + ?Sized>(value: &T, text: String) -> Self {
        let json = serde_json::to_string(value).expect("output types serialize infallibly");
        Rendered { json, text }
    }
}

/// Left-aligned columns separated by two spaces.
pub struct TextTable {
    rows: Vec<Vec<String>>,
}

impl TextTable {
    pub fn new<const N: usize>(header: [&str; N]) -> Self {
        TextTable {
            rows: vec![header.iter().map(|h| h.to_string()).collect()],
        }
    }

    pub fn row<const N: usize>(&mut self, cells: [String; N]) {
        self.rows.push(cells.into());
    }

    pub fn finish(self) -> String {
        let cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                self.rows
                    .iter()
                    .filter_map(|r| r.get(c))
                    .map(|s| s.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        self.rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r
                    .iter()
                    .enumerate()
                    .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
                    .collect();
                cells.join("  ").trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
