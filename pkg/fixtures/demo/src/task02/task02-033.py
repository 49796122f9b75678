# weather task
import sys


def measure_weather(weather_values):
    weather_total = 0
    i = 0
    while i < len(weather_values):
        v = weather_values[i]
        if v >= 17:
            weather_total = weather_total - v
        i += 1
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    if not weather_data:
        print(0)
        return
    print(measure_weather(weather_data))


main()
