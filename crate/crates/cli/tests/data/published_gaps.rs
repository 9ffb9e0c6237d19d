// task, method, category, view, model AP, source-only AP, oracle AP, published closed gap (%)
const CELLS: &[Cell] = &[
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Car", kind: "BEV", model: 79.18, source_only: 68.53, oracle: 87.69, closed_gap: 55.58 },
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Car", kind: "3D", model: 58.64, source_only: 42.52, oracle: 80.36, closed_gap: 42.60 },
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 47.41, source_only: 28.08, oracle: 55.69, closed_gap: 70.01 },
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "3D", model: 41.06, source_only: 23.87, oracle: 52.26, closed_gap: 60.54 },
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Cyclist", kind: "BEV", model: 20.61, source_only: 14.72, oracle: 69.25, closed_gap: 10.80 },
    Cell { task: "N→K PV-RCNN", method: "ST3D", category: "Cyclist", kind: "3D", model: 16.42, source_only: 8.31, oracle: 64.53, closed_gap: 14.43 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Car", kind: "BEV", model: 78.46, source_only: 68.53, oracle: 87.69, closed_gap: 51.83 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Car", kind: "3D", model: 60.88, source_only: 42.52, oracle: 80.36, closed_gap: 48.52 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 47.04, source_only: 28.08, oracle: 55.69, closed_gap: 68.67 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 41.20, source_only: 23.87, oracle: 52.26, closed_gap: 61.04 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 22.65, source_only: 14.72, oracle: 69.25, closed_gap: 14.54 },
    Cell { task: "N→K PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "3D", model: 18.75, source_only: 8.31, oracle: 64.53, closed_gap: 18.56 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Car", kind: "BEV", model: 77.65, source_only: 68.53, oracle: 87.69, closed_gap: 47.60 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Car", kind: "3D", model: 57.82, source_only: 42.52, oracle: 80.36, closed_gap: 40.43 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Pedestrian", kind: "BEV", model: 45.74, source_only: 28.08, oracle: 55.69, closed_gap: 63.96 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Pedestrian", kind: "3D", model: 36.30, source_only: 23.87, oracle: 52.26, closed_gap: 43.78 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Cyclist", kind: "BEV", model: 19.76, source_only: 14.72, oracle: 69.25, closed_gap: 9.24 },
    Cell { task: "N→K PV-RCNN", method: "DTS", category: "Cyclist", kind: "3D", model: 14.83, source_only: 8.31, oracle: 64.53, closed_gap: 11.60 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Car", kind: "BEV", model: 82.09, source_only: 68.53, oracle: 87.69, closed_gap: 70.77 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Car", kind: "3D", model: 68.34, source_only: 42.52, oracle: 80.36, closed_gap: 68.23 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Pedestrian", kind: "BEV", model: 48.37, source_only: 28.08, oracle: 55.69, closed_gap: 73.48 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Pedestrian", kind: "3D", model: 42.24, source_only: 23.87, oracle: 52.26, closed_gap: 64.71 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Cyclist", kind: "BEV", model: 26.42, source_only: 14.72, oracle: 69.25, closed_gap: 21.46 },
    Cell { task: "N→K PV-RCNN", method: "PERE", category: "Cyclist", kind: "3D", model: 23.96, source_only: 8.31, oracle: 64.53, closed_gap: 27.84 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Car", kind: "BEV", model: 70.88, source_only: 64.71, oracle: 87.69, closed_gap: 26.85 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Car", kind: "3D", model: 46.79, source_only: 23.86, oracle: 80.36, closed_gap: 40.58 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 48.57, source_only: 43.75, oracle: 55.69, closed_gap: 40.37 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "3D", model: 42.38, source_only: 38.59, oracle: 52.26, closed_gap: 27.72 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Cyclist", kind: "BEV", model: 54.93, source_only: 48.57, oracle: 69.25, closed_gap: 30.75 },
    Cell { task: "W→K PV-RCNN", method: "ST3D", category: "Cyclist", kind: "3D", model: 51.17, source_only: 45.32, oracle: 64.53, closed_gap: 30.45 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Car", kind: "BEV", model: 71.65, source_only: 64.71, oracle: 87.69, closed_gap: 30.20 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Car", kind: "3D", model: 50.23, source_only: 23.86, oracle: 80.36, closed_gap: 46.67 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 50.94, source_only: 43.75, oracle: 55.69, closed_gap: 60.22 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 47.23, source_only: 38.59, oracle: 52.26, closed_gap: 63.20 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 56.23, source_only: 48.57, oracle: 69.25, closed_gap: 37.04 },
    Cell { task: "W→K PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "3D", model: 50.78, source_only: 45.32, oracle: 64.53, closed_gap: 28.42 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Car", kind: "BEV", model: 69.38, source_only: 64.71, oracle: 87.69, closed_gap: 20.32 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Car", kind: "3D", model: 47.06, source_only: 23.86, oracle: 80.36, closed_gap: 41.06 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Pedestrian", kind: "BEV", model: 46.11, source_only: 43.75, oracle: 55.69, closed_gap: 19.77 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Pedestrian", kind: "3D", model: 42.27, source_only: 38.59, oracle: 52.26, closed_gap: 26.92 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Cyclist", kind: "BEV", model: 49.75, source_only: 48.57, oracle: 69.25, closed_gap: 5.70 },
    Cell { task: "W→K PV-RCNN", method: "DTS", category: "Cyclist", kind: "3D", model: 45.70, source_only: 45.32, oracle: 64.53, closed_gap: 1.98 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Car", kind: "BEV", model: 74.62, source_only: 64.71, oracle: 87.69, closed_gap: 43.12 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Car", kind: "3D", model: 54.17, source_only: 23.86, oracle: 80.36, closed_gap: 53.65 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Pedestrian", kind: "BEV", model: 51.26, source_only: 43.75, oracle: 55.69, closed_gap: 62.90 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Pedestrian", kind: "3D", model: 46.91, source_only: 38.59, oracle: 52.26, closed_gap: 60.86 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Cyclist", kind: "BEV", model: 60.47, source_only: 48.57, oracle: 69.25, closed_gap: 57.54 },
    Cell { task: "W→K PV-RCNN", method: "PERE", category: "Cyclist", kind: "3D", model: 56.82, source_only: 45.32, oracle: 64.53, closed_gap: 59.86 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Car", kind: "BEV", model: 34.79, source_only: 33.54, oracle: 51.43, closed_gap: 6.98 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Car", kind: "3D", model: 21.62, source_only: 19.86, oracle: 36.72, closed_gap: 10.43 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 15.89, source_only: 12.78, oracle: 27.65, closed_gap: 20.91 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Pedestrian", kind: "3D", model: 13.93, source_only: 9.46, oracle: 21.33, closed_gap: 37.65 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Cyclist", kind: "BEV", model: 6.17, source_only: 2.67, oracle: 18.09, closed_gap: 22.70 },
    Cell { task: "W→N PV-RCNN", method: "ST3D", category: "Cyclist", kind: "3D", model: 3.90, source_only: 2.06, oracle: 14.32, closed_gap: 15.01 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Car", kind: "BEV", model: 33.46, source_only: 33.54, oracle: 51.43, closed_gap: -0.45 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Car", kind: "3D", model: 20.57, source_only: 19.86, oracle: 36.72, closed_gap: 4.21 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 14.76, source_only: 12.78, oracle: 27.65, closed_gap: 13.31 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 12.41, source_only: 9.46, oracle: 21.33, closed_gap: 24.85 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 6.23, source_only: 2.67, oracle: 18.09, closed_gap: 23.09 },
    Cell { task: "W→N PV-RCNN", method: "ST3D++", category: "Cyclist", kind: "3D", model: 4.29, source_only: 2.06, oracle: 14.32, closed_gap: 18.19 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Car", kind: "BEV", model: 34.55, source_only: 33.54, oracle: 51.43, closed_gap: 5.65 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Car", kind: "3D", model: 20.64, source_only: 19.86, oracle: 36.72, closed_gap: 4.63 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Pedestrian", kind: "BEV", model: 14.73, source_only: 12.78, oracle: 27.65, closed_gap: 13.11 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Pedestrian", kind: "3D", model: 13.03, source_only: 9.46, oracle: 21.33, closed_gap: 30.08 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Cyclist", kind: "BEV", model: 6.59, source_only: 2.67, oracle: 18.09, closed_gap: 25.42 },
    Cell { task: "W→N PV-RCNN", method: "DTS", category: "Cyclist", kind: "3D", model: 4.11, source_only: 2.06, oracle: 14.32, closed_gap: 16.72 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Car", kind: "BEV", model: 33.87, source_only: 33.54, oracle: 51.43, closed_gap: 1.84 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Car", kind: "3D", model: 20.12, source_only: 19.86, oracle: 36.72, closed_gap: 1.54 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Pedestrian", kind: "BEV", model: 15.20, source_only: 12.78, oracle: 27.65, closed_gap: 16.27 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Pedestrian", kind: "3D", model: 13.47, source_only: 9.46, oracle: 21.33, closed_gap: 33.78 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Cyclist", kind: "BEV", model: 6.05, source_only: 2.67, oracle: 18.09, closed_gap: 21.92 },
    Cell { task: "W→N PV-RCNN", method: "LD", category: "Cyclist", kind: "3D", model: 3.83, source_only: 2.06, oracle: 14.32, closed_gap: 14.44 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Car", kind: "BEV", model: 35.21, source_only: 33.54, oracle: 51.43, closed_gap: 9.33 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Car", kind: "3D", model: 22.83, source_only: 19.86, oracle: 36.72, closed_gap: 17.61 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Pedestrian", kind: "BEV", model: 16.18, source_only: 12.78, oracle: 27.65, closed_gap: 22.86 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Pedestrian", kind: "3D", model: 13.78, source_only: 9.46, oracle: 21.33, closed_gap: 36.39 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Cyclist", kind: "BEV", model: 8.63, source_only: 2.67, oracle: 18.09, closed_gap: 38.65 },
    Cell { task: "W→N PV-RCNN", method: "PERE", category: "Cyclist", kind: "3D", model: 6.47, source_only: 2.06, oracle: 14.32, closed_gap: 35.97 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Car", kind: "BEV", model: 69.32, source_only: 49.27, oracle: 82.65, closed_gap: 60.07 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Car", kind: "3D", model: 49.66, source_only: 25.13, oracle: 75.94, closed_gap: 48.28 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 40.90, source_only: 24.96, oracle: 46.26, closed_gap: 74.84 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "3D", model: 31.55, source_only: 21.68, oracle: 39.85, closed_gap: 54.32 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "BEV", model: 17.86, source_only: 12.29, oracle: 57.74, closed_gap: 12.26 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "3D", model: 14.33, source_only: 6.74, oracle: 52.88, closed_gap: 16.50 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Car", kind: "BEV", model: 72.01, source_only: 49.27, oracle: 82.65, closed_gap: 68.12 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Car", kind: "3D", model: 50.54, source_only: 25.13, oracle: 75.94, closed_gap: 50.01 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 40.08, source_only: 24.96, oracle: 46.26, closed_gap: 70.98 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 34.16, source_only: 21.68, oracle: 39.85, closed_gap: 68.68 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 18.75, source_only: 12.29, oracle: 57.74, closed_gap: 14.21 },
    Cell { task: "N→K SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "3D", model: 16.90, source_only: 6.74, oracle: 52.88, closed_gap: 22.02 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Car", kind: "BEV", model: 71.96, source_only: 49.27, oracle: 82.65, closed_gap: 67.97 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Car", kind: "3D", model: 58.07, source_only: 25.13, oracle: 75.94, closed_gap: 64.83 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "BEV", model: 40.27, source_only: 24.96, oracle: 46.26, closed_gap: 71.88 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "3D", model: 33.82, source_only: 21.68, oracle: 39.85, closed_gap: 66.81 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Cyclist", kind: "BEV", model: 17.38, source_only: 12.29, oracle: 57.74, closed_gap: 11.20 },
    Cell { task: "N→K SECOND-IoU", method: "DTS", category: "Cyclist", kind: "3D", model: 15.95, source_only: 6.74, oracle: 52.88, closed_gap: 19.96 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Car", kind: "BEV", model: 73.65, source_only: 49.27, oracle: 82.65, closed_gap: 73.04 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Car", kind: "3D", model: 66.84, source_only: 25.13, oracle: 75.94, closed_gap: 82.09 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "BEV", model: 42.69, source_only: 24.96, oracle: 46.26, closed_gap: 83.24 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "3D", model: 35.47, source_only: 21.68, oracle: 39.85, closed_gap: 75.89 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Cyclist", kind: "BEV", model: 21.74, source_only: 12.29, oracle: 57.74, closed_gap: 20.79 },
    Cell { task: "N→K SECOND-IoU", method: "PERE", category: "Cyclist", kind: "3D", model: 19.39, source_only: 6.74, oracle: 52.88, closed_gap: 27.42 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Car", kind: "BEV", model: 66.83, source_only: 46.38, oracle: 82.65, closed_gap: 56.38 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Car", kind: "3D", model: 42.67, source_only: 19.12, oracle: 75.94, closed_gap: 41.45 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 43.02, source_only: 41.28, oracle: 46.26, closed_gap: 34.94 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "3D", model: 35.79, source_only: 34.91, oracle: 39.85, closed_gap: 17.81 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "BEV", model: 45.59, source_only: 43.37, oracle: 57.74, closed_gap: 15.45 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "3D", model: 42.70, source_only: 41.06, oracle: 52.88, closed_gap: 13.87 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Car", kind: "BEV", model: 69.28, source_only: 46.38, oracle: 82.65, closed_gap: 63.14 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Car", kind: "3D", model: 46.40, source_only: 19.12, oracle: 75.94, closed_gap: 42.67 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 42.35, source_only: 41.28, oracle: 46.26, closed_gap: 21.49 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 35.31, source_only: 34.91, oracle: 39.85, closed_gap: 8.10 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 44.86, source_only: 43.37, oracle: 57.74, closed_gap: 10.36 },
    Cell { task: "W→K SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "3D", model: 43.04, source_only: 41.06, oracle: 52.88, closed_gap: 16.75 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Car", kind: "BEV", model: 64.38, source_only: 46.38, oracle: 82.65, closed_gap: 49.63 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Car", kind: "3D", model: 39.46, source_only: 19.12, oracle: 75.94, closed_gap: 35.80 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "BEV", model: 41.94, source_only: 41.28, oracle: 46.26, closed_gap: 13.25 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "3D", model: 34.93, source_only: 34.91, oracle: 39.85, closed_gap: 0.40 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Cyclist", kind: "BEV", model: 43.90, source_only: 43.37, oracle: 57.74, closed_gap: 3.69 },
    Cell { task: "W→K SECOND-IoU", method: "DTS", category: "Cyclist", kind: "3D", model: 41.76, source_only: 41.06, oracle: 52.88, closed_gap: 5.92 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Car", kind: "BEV", model: 71.02, source_only: 46.38, oracle: 82.65, closed_gap: 67.93 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Car", kind: "3D", model: 49.52, source_only: 19.12, oracle: 75.94, closed_gap: 53.50 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "BEV", model: 43.86, source_only: 41.28, oracle: 46.26, closed_gap: 51.81 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "3D", model: 36.67, source_only: 34.91, oracle: 39.85, closed_gap: 35.63 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Cyclist", kind: "BEV", model: 48.22, source_only: 43.37, oracle: 57.74, closed_gap: 33.75 },
    Cell { task: "W→K SECOND-IoU", method: "PERE", category: "Cyclist", kind: "3D", model: 43.70, source_only: 41.06, oracle: 52.88, closed_gap: 22.36 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Car", kind: "BEV", model: 32.07, source_only: 28.73, oracle: 48.72, closed_gap: 16.71 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Car", kind: "3D", model: 22.49, source_only: 16.32, oracle: 35.63, closed_gap: 31.95 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "BEV", model: 13.45, source_only: 8.42, oracle: 23.02, closed_gap: 34.45 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Pedestrian", kind: "3D", model: 8.92, source_only: 5.31, oracle: 19.88, closed_gap: 24.78 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "BEV", model: 7.40, source_only: 3.09, oracle: 15.36, closed_gap: 35.13 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D", category: "Cyclist", kind: "3D", model: 4.22, source_only: 2.57, oracle: 12.09, closed_gap: 17.33 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Car", kind: "BEV", model: 31.80, source_only: 28.73, oracle: 48.72, closed_gap: 15.36 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Car", kind: "3D", model: 21.32, source_only: 16.32, oracle: 35.63, closed_gap: 25.89 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "BEV", model: 12.78, source_only: 8.42, oracle: 23.02, closed_gap: 29.86 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Pedestrian", kind: "3D", model: 9.31, source_only: 5.31, oracle: 19.88, closed_gap: 27.45 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "BEV", model: 7.27, source_only: 3.09, oracle: 15.36, closed_gap: 34.07 },
    Cell { task: "W→N SECOND-IoU", method: "ST3D++", category: "Cyclist", kind: "3D", model: 4.36, source_only: 2.57, oracle: 12.09, closed_gap: 18.80 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Car", kind: "BEV", model: 29.85, source_only: 28.73, oracle: 48.72, closed_gap: 5.60 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Car", kind: "3D", model: 21.39, source_only: 16.32, oracle: 35.63, closed_gap: 26.26 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "BEV", model: 11.40, source_only: 8.42, oracle: 23.02, closed_gap: 20.41 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Pedestrian", kind: "3D", model: 8.71, source_only: 5.31, oracle: 19.88, closed_gap: 23.34 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Cyclist", kind: "BEV", model: 6.85, source_only: 3.09, oracle: 15.36, closed_gap: 30.64 },
    Cell { task: "W→N SECOND-IoU", method: "DTS", category: "Cyclist", kind: "3D", model: 3.68, source_only: 2.57, oracle: 12.09, closed_gap: 11.65 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Car", kind: "BEV", model: 30.95, source_only: 28.73, oracle: 48.72, closed_gap: 11.10 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Car", kind: "3D", model: 22.03, source_only: 16.32, oracle: 35.63, closed_gap: 29.57 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Pedestrian", kind: "BEV", model: 12.55, source_only: 8.42, oracle: 23.02, closed_gap: 28.29 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Pedestrian", kind: "3D", model: 8.34, source_only: 5.31, oracle: 19.88, closed_gap: 20.80 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Cyclist", kind: "BEV", model: 7.19, source_only: 3.09, oracle: 15.36, closed_gap: 33.41 },
    Cell { task: "W→N SECOND-IoU", method: "LD", category: "Cyclist", kind: "3D", model: 4.01, source_only: 2.57, oracle: 12.09, closed_gap: 15.13 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Car", kind: "BEV", model: 34.48, source_only: 28.73, oracle: 48.72, closed_gap: 28.76 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Car", kind: "3D", model: 23.76, source_only: 16.32, oracle: 35.63, closed_gap: 38.53 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "BEV", model: 15.45, source_only: 8.42, oracle: 23.02, closed_gap: 48.15 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Pedestrian", kind: "3D", model: 11.47, source_only: 5.31, oracle: 19.88, closed_gap: 42.28 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Cyclist", kind: "BEV", model: 8.79, source_only: 3.09, oracle: 15.36, closed_gap: 46.45 },
    Cell { task: "W→N SECOND-IoU", method: "PERE", category: "Cyclist", kind: "3D", model: 5.84, source_only: 2.57, oracle: 12.09, closed_gap: 34.35 },
];
