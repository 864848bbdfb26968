use serde::{Deserialize, Serialize};

use super::element::{ElementDims, ElementOutline};
use super::export::Drawing;
use super::polygon::Polygon;
use super::{GeometryError, Polarization};

/// Pitches closer than this are treated as equal.
const PITCH_TOL: f64 = 1e-6;

/// Vertical gap between boards when a layout is panelized for export.
const SHEET_GAP: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PcbSide {
    Front,
    Back,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Top,
    Bottom,
}

/// One element on one board.
///
/// x-pol boards lie in planes `y = plane_offset` and run along x; y-pol boards
/// lie in planes `x = plane_offset` and run along y. With the grid cell
/// `(row, col)` both polarizations share the centre `(col·pitch, row·pitch)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElementPlacement {
    pub element_index: usize,
    pub polarization: Polarization,
    pub row: usize,
    pub col: usize,
    /// Index of the board carrying this element.
    pub board: usize,
    pub plane_offset: f64,
    pub lateral_offset: f64,
    pub pcb_side: PcbSide,
}

/// Interleave slot cut into a board where a perpendicular board crosses it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Slot {
    pub polarization: Polarization,
    pub board: usize,
    /// Slot centre along the board.
    pub position: f64,
    pub width: f64,
    pub length: f64,
    pub from_edge: Edge,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrayLayout {
    pub elements: Vec<ElementPlacement>,
    pub pitch: f64,
    pub rows: usize,
    pub cols: usize,
    pub slots: Vec<Slot>,
    pub dims_x: ElementDims,
    pub dims_y: ElementDims,
}

/// Lays out a dual-polarized `rows × cols` egg-crate array.
///
/// Every grid cell holds one x-pol and one y-pol element. Same-polarization
/// neighbours alternate PCB side in a checkerboard. Each board crossing gets
/// a half-height slot in both boards, cut from the top edge of the y-pol
/// board and the bottom edge of the x-pol board. A slot is as wide as the
/// crossing board's substrate plus the slotted board's clearance `w_sp`.
pub fn build_array_layout(
    d_x: &ElementDims,
    d_y: &ElementDims,
    rows: usize,
    cols: usize,
) -> Result<ArrayLayout, GeometryError> {
    if rows == 0 || cols == 0 {
        return Err(GeometryError::EmptyArray { rows, cols });
    }
    d_x.validate()?;
    d_y.validate()?;
    if d_x.polarization != Polarization::X || d_y.polarization != Polarization::Y {
        return Err(GeometryError::InvalidDims("expected x-pol dimensions first and y-pol dimensions second".into()));
    }
    let (px, py) = (d_x.pitch(), d_y.pitch());
    if (px - py).abs() > PITCH_TOL {
        return Err(GeometryError::PitchMismatch { x: px, y: py });
    }
    let pitch = py;

    let side = |row: usize, col: usize| {
        if (row + col).is_multiple_of(2) {
            PcbSide::Front
        } else {
            PcbSide::Back
        }
    };

    let mut elements = Vec::with_capacity(2 * rows * cols);
    for row in 0..rows {
        for col in 0..cols {
            elements.push(ElementPlacement {
                element_index: elements.len(),
                polarization: Polarization::X,
                row,
                col,
                board: row,
                plane_offset: row as f64 * pitch,
                lateral_offset: col as f64 * pitch,
                pcb_side: side(row, col),
            });
        }
    }
    for col in 0..cols {
        for row in 0..rows {
            elements.push(ElementPlacement {
                element_index: elements.len(),
                polarization: Polarization::Y,
                row,
                col,
                board: col,
                plane_offset: col as f64 * pitch,
                lateral_offset: row as f64 * pitch,
                pcb_side: side(row, col),
            });
        }
    }

    let mut slots = Vec::new();
    if rows * cols > 1 {
        for row in 0..rows {
            for col in 0..cols {
                slots.push(Slot {
                    polarization: Polarization::X,
                    board: row,
                    position: col as f64 * pitch,
                    width: d_y.h_s + d_x.w_sp,
                    length: d_x.h_b / 2.0,
                    from_edge: Edge::Bottom,
                });
            }
        }
        for col in 0..cols {
            for row in 0..rows {
                slots.push(Slot {
                    polarization: Polarization::Y,
                    board: col,
                    position: row as f64 * pitch,
                    width: d_x.h_s + d_y.w_sp,
                    length: d_y.h_b / 2.0,
                    from_edge: Edge::Top,
                });
            }
        }
    }

    Ok(ArrayLayout { elements, pitch, rows, cols, slots, dims_x: *d_x, dims_y: *d_y })
}

impl ArrayLayout {
    pub fn dims(&self, pol: Polarization) -> &ElementDims {
        match pol {
            Polarization::X => &self.dims_x,
            Polarization::Y => &self.dims_y,
        }
    }

    /// Number of boards of a polarization.
    pub fn board_count(&self, pol: Polarization) -> usize {
        match pol {
            Polarization::X => self.rows,
            Polarization::Y => self.cols,
        }
    }

    /// Elements along one board of a polarization.
    pub fn board_length(&self, pol: Polarization) -> usize {
        match pol {
            Polarization::X => self.cols,
            Polarization::Y => self.rows,
        }
    }

    /// Slot width used on boards of `pol`.
    pub fn slot_width(&self, pol: Polarization) -> Option<f64> {
        self.slots.iter().find(|s| s.polarization == pol).map(|s| s.width)
    }

    /// Board outlines, copper leaves and slots of every board, stacked on one
    /// sheet (x-pol boards first). Each board's own coordinates match the
    /// element frame: `y = 0` at the feed edge and the first element centred
    /// on `x = 0`.
    pub fn drawing(&self, outline_x: &ElementOutline, outline_y: &ElementOutline) -> Drawing {
        let mut drawing = Drawing::default();
        let mut sheet_row = 0usize;
        for pol in [Polarization::X, Polarization::Y] {
            let outline = match pol {
                Polarization::X => outline_x,
                Polarization::Y => outline_y,
            };
            let dims = self.dims(pol);
            for board in 0..self.board_count(pol) {
                let dy = sheet_row as f64 * (dims.h_b + SHEET_GAP);
                sheet_row += 1;
                let name = format!("{pol}-board{board}");
                let span = (self.board_length(pol) - 1) as f64 * self.pitch;
                drawing.push(
                    format!("{name}/outline"),
                    Polygon::rectangle(-dims.w_a / 2.0, 0.0, span + dims.w_a / 2.0, dims.h_b).translated(0.0, dy),
                );
                for e in self.elements.iter().filter(|e| e.polarization == pol && e.board == board) {
                    let (top, bottom) = match e.pcb_side {
                        PcbSide::Front => (&outline.leaves[0], &outline.leaves[1]),
                        PcbSide::Back => (&outline.leaves[1], &outline.leaves[0]),
                    };
                    let idx = e.element_index;
                    drawing.push(format!("{name}/e{idx}/top"), top.translated(e.lateral_offset, dy));
                    drawing.push(format!("{name}/e{idx}/bottom"), bottom.translated(e.lateral_offset, dy));
                }
                for (k, s) in self.slots.iter().filter(|s| s.polarization == pol && s.board == board).enumerate() {
                    let (y0, y1) = match s.from_edge {
                        Edge::Bottom => (0.0, s.length),
                        Edge::Top => (dims.h_b - s.length, dims.h_b),
                    };
                    let half = s.width / 2.0;
                    drawing.push(
                        format!("{name}/slot{k}"),
                        Polygon::rectangle(s.position - half, y0, s.position + half, y1).translated(0.0, dy),
                    );
                }
            }
        }
        drawing
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proto() -> (ElementDims, ElementDims) {
        (ElementDims::prototype(Polarization::X), ElementDims::prototype(Polarization::Y))
    }

    #[test]
    fn prototype_three_by_three() {
        let (dx, dy) = proto();
        let l = build_array_layout(&dx, &dy, 3, 3).unwrap();
        assert!((l.pitch - 24.13).abs() < 1e-9);
        assert_eq!(l.elements.len(), 18);
        assert!((l.slot_width(Polarization::Y).unwrap() - 0.354).abs() < 1e-12);
        assert!((l.slot_width(Polarization::X).unwrap() - 0.254).abs() < 1e-12);
        assert_eq!(l.slots.len(), 18);
        assert!(l.slots.iter().all(|s| (s.length - 28.28).abs() < 1e-12));
    }

    #[test]
    fn neighbours_alternate_side() {
        let (dx, dy) = proto();
        let l = build_array_layout(&dx, &dy, 3, 3).unwrap();
        for a in &l.elements {
            for b in &l.elements {
                let adjacent = a.polarization == b.polarization && a.row.abs_diff(b.row) + a.col.abs_diff(b.col) == 1;
                if adjacent {
                    assert_ne!(a.pcb_side, b.pcb_side);
                }
            }
        }
    }

    #[test]
    fn concentric_and_on_pitch_grid() {
        let (dx, dy) = proto();
        let l = build_array_layout(&dx, &dy, 3, 3).unwrap();
        let centre = |e: &ElementPlacement| match e.polarization {
            Polarization::X => (e.lateral_offset, e.plane_offset),
            Polarization::Y => (e.plane_offset, e.lateral_offset),
        };
        for e in &l.elements {
            let k = e.lateral_offset / l.pitch;
            assert!((k - k.round()).abs() < 1e-12);
            let twin = l
                .elements
                .iter()
                .find(|o| o.polarization != e.polarization && o.row == e.row && o.col == e.col)
                .unwrap();
            assert_eq!(centre(e), centre(twin));
        }
    }

    #[test]
    fn single_cell_has_no_slots() {
        let (dx, dy) = proto();
        let l = build_array_layout(&dx, &dy, 1, 1).unwrap();
        assert!(l.slots.is_empty());
        assert!(l.elements.iter().all(|e| e.pcb_side == PcbSide::Front));
        assert_eq!(l.elements.iter().filter(|e| e.polarization == Polarization::X).count(), 1);
    }

    #[test]
    fn errors() {
        let (mut dx, dy) = proto();
        assert!(matches!(build_array_layout(&dx, &dy, 0, 3), Err(GeometryError::EmptyArray { .. })));
        dx.w_ol = 30.0;
        assert!(matches!(build_array_layout(&dx, &dy, 3, 3), Err(GeometryError::InvalidOverlap { .. })));
        let (mut dx, dy) = proto();
        dx.w_ol = 3.0;
        assert!(matches!(build_array_layout(&dx, &dy, 3, 3), Err(GeometryError::PitchMismatch { .. })));
    }
}
