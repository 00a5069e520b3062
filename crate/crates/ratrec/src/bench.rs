//! Timing harness: every (input, method) pair runs on a worker thread with
//! its own deadline, and CPU time is taken from the worker's thread clock.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use ratrec_core::{convert, Budget, Error, HolonomicEq, Limits, Method};
use serde::Serialize;

/// Wall-clock deadline usable as a cancellation budget.
#[derive(Clone, Copy, Debug)]
pub struct Deadline(pub Instant);

impl Deadline {
    pub fn after(timeout: Duration) -> Self {
        Deadline(Instant::now() + timeout)
    }
}

impl Budget for Deadline {
    fn exhausted(&self) -> bool {
        Instant::now() >= self.0
    }
}

/// CPU time consumed so far by the calling thread.
pub fn thread_cpu_time() -> Duration {
    let mut ts = libc::timespec { tv_sec: 0, tv_nsec: 0 };
    // SAFETY: `ts` is a valid, writable timespec.
    let rc = unsafe { libc::clock_gettime(libc::CLOCK_THREAD_CPUTIME_ID, &mut ts) };
    assert_eq!(rc, 0, "thread CPU clock unavailable");
    Duration::new(ts.tv_sec as u64, ts.tv_nsec as u32)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub input_id: String,
    pub method: String,
    /// `None` marks a timeout.
    pub cpu_seconds: Option<f64>,
    pub out_order: Option<u32>,
    pub out_degree: Option<u32>,
    /// Set when the conversion failed for a reason other than time.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl BenchRow {
    pub fn timed_out(&self) -> bool {
        self.cpu_seconds.is_none() && self.error.is_none()
    }
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::La => "LA",
        Method::Gb => "GB",
    }
}

/// Runs one conversion with its own deadline.
pub fn run_one(input_id: &str, h: &HolonomicEq, method: Method, timeout: Duration) -> BenchRow {
    let deadline = Deadline::after(timeout);
    let start = thread_cpu_time();
    let result = convert(h, method, None, Limits::with_budget(&deadline));
    let cpu = (thread_cpu_time() - start).as_secs_f64();
    let mut row = BenchRow {
        input_id: input_id.to_string(),
        method: method_name(method).to_string(),
        cpu_seconds: Some(cpu),
        out_order: None,
        out_degree: None,
        error: None,
    };
    match result {
        Ok(r) => {
            row.out_order = Some(r.order);
            row.out_degree = Some(r.degree());
        }
        Err(Error::Timeout(_)) => row.cpu_seconds = None,
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// One row per (input, method), in input-major order. Runs on up to
/// `workers` threads.
pub fn bench(inputs: &[(String, HolonomicEq)], methods: &[Method], timeout: Duration, workers: usize) -> Vec<BenchRow> {
    assert!(timeout > Duration::ZERO, "timeout must be positive");
    let tasks: Vec<(usize, Method)> = (0..inputs.len()).flat_map(|i| methods.iter().map(move |&m| (i, m))).collect();
    let next = AtomicUsize::new(0);
    let rows: Mutex<Vec<Option<BenchRow>>> = Mutex::new(vec![None; tasks.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers.max(1).min(tasks.len().max(1)) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(i, m)) = tasks.get(k) else { break };
                let (id, h) = &inputs[i];
                let row = run_one(id, h, m, timeout);
                rows.lock().expect("no panics while holding the lock")[k] = Some(row);
            });
        }
    });
    rows.into_inner().expect("workers finished").into_iter().map(|r| r.expect("every task ran")).collect()
}

/// Seconds for the CPU column; timeouts read `300+` for a 300 s cap.
pub fn render_time(row: &BenchRow, timeout: Duration) -> String {
    match (row.cpu_seconds, &row.error) {
        (_, Some(_)) => "error".to_string(),
        (Some(t), None) => format!("{:.3}", t),
        (None, None) => format!("{}+", timeout.as_secs()),
    }
}

pub fn render_table(rows: &[BenchRow], timeout: Duration) -> String {
    let mut out = String::new();
    writeln!(out, "{:<12} {:<6} {:>10} {:>6} {:>6}", "input", "method", "cpu_s", "order", "degree").unwrap();
    for r in rows {
        let show = |x: Option<u32>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:<12} {:<6} {:>10} {:>6} {:>6}",
            r.input_id,
            r.method,
            render_time(r, timeout),
            show(r.out_order),
            show(r.out_degree)
        )
        .unwrap();
    }
    out
}
