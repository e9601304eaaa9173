//! Minimal hand-rolled SVG line plots. Presentational only — the CSV output
//! is the contractual format; nothing here is covered by byte-exactness
//! guarantees.

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub dashed: bool,
}

pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub log_x: bool,
    pub series: Vec<Series>,
    /// Horizontal dashed guide (the scan asymptote).
    pub hline: Option<(f64, String)>,
}

const W: f64 = 640.0;
const H: f64 = 420.0;
const MARGIN: f64 = 54.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

impl Plot {
    pub fn render(&self) -> String {
        let tx = |x: f64| if self.log_x { x.ln() } else { x };
        let mut x_min = f64::INFINITY;
        let mut x_max = f64::NEG_INFINITY;
        let mut y_min = f64::INFINITY;
        let mut y_max = f64::NEG_INFINITY;
        for s in &self.series {
            for &(x, y) in &s.points {
                x_min = x_min.min(tx(x));
                x_max = x_max.max(tx(x));
                y_min = y_min.min(y);
                y_max = y_max.max(y);
            }
        }
        if let Some((y, _)) = self.hline {
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
        if x_min >= x_max || !x_min.is_finite() {
            x_max = x_min + 1.0;
        }
        if y_min >= y_max || !y_min.is_finite() {
            y_max = y_min + 1.0;
        }
        let pad = 0.06 * (y_max - y_min);
        y_min -= pad;
        y_max += pad;
        let px = |x: f64| MARGIN + (tx(x) - x_min) / (x_max - x_min) * (W - 2.0 * MARGIN);
        let py = |y: f64| H - MARGIN - (y - y_min) / (y_max - y_min) * (H - 2.0 * MARGIN);

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
             viewBox=\"0 0 {W} {H}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        ));
        out.push_str(&format!(
            "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n\
             <text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
            W / 2.0,
            xml_escape(&self.title)
        ));
        // axes
        out.push_str(&format!(
            "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
             <line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
            m = MARGIN,
            r = W - MARGIN,
            t = MARGIN,
            b = H - MARGIN
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            W / 2.0,
            H - 14.0,
            xml_escape(&self.x_label)
        ));
        out.push_str(&format!(
            "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>\n",
            H / 2.0,
            H / 2.0,
            xml_escape(&self.y_label)
        ));
        // tick labels at the extremes
        for (frac, val) in [(0.0, x_min), (1.0, x_max)] {
            let shown = if self.log_x { val.exp() } else { val };
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{shown:.3}</text>\n",
                MARGIN + frac * (W - 2.0 * MARGIN),
                H - MARGIN + 18.0
            ));
        }
        for (frac, val) in [(0.0, y_min), (1.0, y_max)] {
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{val:.3}</text>\n",
                MARGIN - 6.0,
                H - MARGIN - frac * (H - 2.0 * MARGIN) + 4.0
            ));
        }
        if let Some((y, label)) = &self.hline {
            out.push_str(&format!(
                "<line x1=\"{m}\" y1=\"{y}\" x2=\"{r}\" y2=\"{y}\" stroke=\"#d62728\" \
                 stroke-dasharray=\"7,4\"/>\n<text x=\"{r}\" y=\"{ty}\" text-anchor=\"end\" \
                 fill=\"#d62728\">{}</text>\n",
                xml_escape(label),
                m = MARGIN,
                r = W - MARGIN,
                y = py(*y),
                ty = py(*y) - 5.0
            ));
        }
        for (i, s) in self.series.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let pts: Vec<String> = s
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
                .collect();
            let dash = if s.dashed {
                " stroke-dasharray=\"5,3\""
            } else {
                ""
            };
            out.push_str(&format!(
                "<polyline fill=\"none\" stroke=\"{color}\"{dash} points=\"{}\"/>\n",
                pts.join(" ")
            ));
            out.push_str(&format!(
                "<text x=\"{}\" y=\"{}\" fill=\"{color}\">{}</text>\n",
                W - MARGIN + 4.0,
                MARGIN + 16.0 * i as f64,
                xml_escape(&s.label)
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
