// Starts the JSON render service on an ephemeral port, sends it one
// weighted render request and prints the returned areas.
//
//     cargo run --example render_service
//
// For a long-running server use `origami serve --port 8080`.

use std::error::Error;

use origami::api::{router, DatasetPayload, Mode, RenderRequest, RenderResponse};
use origami::embedded_example;
use tokio::io::{AsyncReadExt, AsyncWriteExt};

pub async fn run_example() -> Result<RenderResponse, Box<dyn Error>> {
    let listener = tokio::net::TcpListener::bind("127.0.0.1:0").await?;
    let addr = listener.local_addr()?;
    let server = tokio::spawn(async move { axum::serve(listener, router(None)).await });

    let request = RenderRequest {
        mode: Mode::Weighted,
        data: DatasetPayload::from(&embedded_example()),
        objects: vec!["Titrated oral misoprostol".into()],
        weights: Some(vec![0.15, 0.25, 0.3, 0.2, 0.1]),
        aux: None,
        options: None,
    };
    let body = serde_json::to_vec(&request)?;

    let mut stream = tokio::net::TcpStream::connect(addr).await?;
    let head = format!(
        "POST /api/render HTTP/1.1\r\nHost: {addr}\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n",
        body.len()
    );
    stream.write_all(head.as_bytes()).await?;
    stream.write_all(&body).await?;
    let mut raw = Vec::new();
    stream.read_to_end(&mut raw).await?;
    server.abort();

    let text = String::from_utf8(raw)?;
    let (status, payload) = text.split_once("\r\n\r\n").ok_or("malformed response")?;
    if !status.starts_with("HTTP/1.1 200") {
        return Err(format!("unexpected response: {status}").into());
    }
    Ok(serde_json::from_str(payload)?)
}

#[tokio::main]
async fn main() -> Result<(), Box<dyn Error>> {
    let resp = run_example().await?;
    for (object, area) in &resp.areas {
        println!(
            "{object}: unweighted {:.3}, weighted {:.3}",
            area.normalized,
            area.weighted_normalized.unwrap_or(f64::NAN)
        );
    }
    println!("svg: {} bytes", resp.svg.len());
    Ok(())
}
